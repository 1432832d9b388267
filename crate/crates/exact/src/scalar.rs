use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ExactError, Result};
use crate::poly::Poly;

/// The three supported ground rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integer,
    Rational,
    /// Integer polynomials in the listed variables.
    Polynomial(Arc<[String]>),
}

impl Ring {
    pub fn polynomial<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Ring {
        Ring::Polynomial(vars.into_iter().map(Into::into).collect::<Vec<_>>().into())
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::Rational)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Ring::Integer => "int",
            Ring::Rational => "rat",
            Ring::Polynomial(_) => "poly_int",
        }
    }

    pub fn vars(&self) -> &[String] {
        match self {
            Ring::Polynomial(v) => v,
            _ => &[],
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "ZZ"),
            Ring::Rational => write!(f, "QQ"),
            Ring::Polynomial(v) => write!(f, "ZZ[{}]", v.join(",")),
        }
    }
}

/// An exact ring element, always kept in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
}

impl Scalar {
    pub fn zero(ring: &Ring) -> Scalar {
        Scalar::from_bigint(ring, BigInt::zero())
    }

    pub fn one(ring: &Ring) -> Scalar {
        Scalar::from_bigint(ring, BigInt::one())
    }

    pub fn from_int(ring: &Ring, n: i64) -> Scalar {
        Scalar::from_bigint(ring, BigInt::from(n))
    }

    pub fn from_bigint(ring: &Ring, n: BigInt) -> Scalar {
        match ring {
            Ring::Integer => Scalar::Int(n),
            Ring::Rational => Scalar::Rat(BigRational::from_integer(n)),
            Ring::Polynomial(vars) => Scalar::Poly(Poly::constant(vars.clone(), n)),
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Integer,
            Scalar::Rat(_) => Ring::Rational,
            Scalar::Poly(p) => Ring::Polynomial(p.vars().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Poly(p) => p.is_one(),
        }
    }

    /// True when the element is invertible in its ring.
    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(n) => n.abs().is_one(),
            Scalar::Rat(q) => !q.is_zero(),
            Scalar::Poly(p) => p.as_constant().is_some_and(|c| c.abs().is_one()),
        }
    }

    fn mixed(&self, other: &Scalar) -> ExactError {
        ExactError::MixedRing {
            left: self.ring(),
            right: other.ring(),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.try_add(b)?),
            _ => return Err(self.mixed(other)),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a - b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.try_sub(b)?),
            _ => return Err(self.mixed(other)),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.try_mul(b)?),
            _ => return Err(self.mixed(other)),
        })
    }

    /// Exact quotient `self / other`. Over the integers and polynomial rings the
    /// division must leave no remainder.
    pub fn exact_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if !r.is_zero() {
                    return Err(ExactError::InexactDivision);
                }
                Scalar::Int(q)
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a.exact_div(b)?),
            _ => return Err(self.mixed(other)),
        })
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if !self.is_unit() {
            return Err(ExactError::NotInvertible(self.ring()));
        }
        Scalar::one(&self.ring()).exact_div(self)
    }

    /// Converts into `target` when the value is representable there
    /// (integers embed everywhere, rationals become integers only when integral).
    pub fn to_ring(&self, target: &Ring) -> Result<Scalar> {
        let fail = || ExactError::WrongRing {
            expected: target.kind_name(),
            got: self.ring(),
        };
        Ok(match (self, target) {
            (Scalar::Int(n), _) => Scalar::from_bigint(target, n.clone()),
            (Scalar::Rat(q), Ring::Rational) => Scalar::Rat(q.clone()),
            (Scalar::Rat(q), _) if q.is_integer() => Scalar::from_bigint(target, q.to_integer()),
            (Scalar::Poly(p), Ring::Polynomial(v)) if p.vars() == v => self.clone(),
            (Scalar::Poly(p), _) => match p.as_constant() {
                Some(c) => Scalar::from_bigint(target, c),
                None => return Err(fail()),
            },
            _ => return Err(fail()),
        })
    }

    /// Evaluates a polynomial at integer values; other kinds are returned unchanged.
    pub fn specialize(&self, values: &[BigInt]) -> Scalar {
        match self {
            Scalar::Poly(p) => Scalar::Int(p.evaluate(values)),
            other => other.clone(),
        }
    }

    pub fn as_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            Scalar::Rat(q) if q.is_integer() => Some(q.to_integer()),
            Scalar::Poly(p) => p.as_constant(),
            _ => None,
        }
    }

    pub fn parse(ring: &Ring, input: &str) -> Result<Scalar> {
        let err = |reason: String| ExactError::Parse {
            what: "scalar",
            input: input.to_string(),
            reason,
        };
        let s = input.trim();
        match ring {
            Ring::Integer => s.parse::<BigInt>().map(Scalar::Int).map_err(|e| err(e.to_string())),
            Ring::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|e: num_bigint::ParseBigIntError| err(e.to_string()))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|e: num_bigint::ParseBigIntError| err(e.to_string()))?;
                if den.is_zero() {
                    return Err(err("zero denominator".into()));
                }
                Ok(Scalar::Rat(BigRational::new(num, den)))
            }
            Ring::Polynomial(vars) => Poly::parse(vars.clone(), s).map(Scalar::Poly),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Poly(p) => write!(f, "{p}"),
        }
    }
}

// Operator impls panic on mixed rings; use the `try_*` methods when operands
// come from unvalidated input.
macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar operands from different rings")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(-n),
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
