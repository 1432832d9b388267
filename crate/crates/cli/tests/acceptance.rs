//! End-to-end acceptance run: one line per criterion, then a single verdict.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use bnskein::cobordism::DecoratedCobordism;
use bnskein::colimit::{
    blocks_of, colim_bruteforce, colim_terminal, delete_left_invertible, edge_spans, presentation_from_spans,
    pullback_reduce, pushout_quotient_invariants, PullbackWitness, Span,
};
use bnskein::frobenius::{builtin, permutation_matrix, FrobeniusAlgebra, BUILTIN_NAMES};
use bnskein::rewrite;
use bnskein::skein::{
    handle_quotient, local_connected_closed_form, present, sigma_i_pipeline_dims, tensor_algebra_oracle,
    unorientable_graded, unorientable_module, TunnelingGraph,
};
use bnskein_cli::formats::canonicalize;
use bnskein_exact::{cokernel_invariants, ModuleInvariants, Ring, Scalar, SparseMatrix};
use common::{
    has_cycle, labels, random_cobordism, random_connected_chain, random_functor_graph, random_terminal, two_vertex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn algebras() -> Vec<FrobeniusAlgebra> {
    BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect()
}

fn rational(name: &str) -> FrobeniusAlgebra {
    builtin(name).unwrap().to_ring(&Ring::Rational).unwrap()
}

fn criterion_1() -> Outcome {
    let algs = algebras();
    let start = Instant::now();
    for a in &algs {
        let r = a.verify_axioms();
        ensure(r.passed(), || format!("{:?}", r.failed_axioms()))?;
    }
    within(start, Duration::from_secs(1))
}

fn sandwich(a: &FrobeniusAlgebra, i: usize, x: &SparseMatrix, j: usize) -> SparseMatrix {
    a.id_n(i).kron(x).unwrap().kron(&a.id_n(j)).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    for a in algebras() {
        for n in 1..=5 {
            ensure(a.eps_n(n).mul(&a.d_n(n)).unwrap().is_identity(), || {
                format!("ε^{n}∘d_{n}")
            })?;
            ensure(a.m_n(n).mul(&a.d_n(n)).unwrap() == a.handle_pow(n - 1), || {
                format!("m_{n}∘d_{n}")
            })?;
            for p in permutations(n) {
                let s = permutation_matrix(a.ring(), a.rank(), &p);
                ensure(s.mul(&a.d_n(n)).unwrap() == a.d_n(n), || format!("σ {p:?}"))?;
            }
            for k in 0..=n {
                for i in 0..=(n - k) {
                    let j = n - k - i;
                    let lhs = sandwich(&a, i, &a.d_n(k), j).mul(&a.d_n(i + 1 + j)).unwrap();
                    ensure(lhs == a.d_n(n), || format!("operadic i={i} k={k} j={j}"))?;
                }
            }
            checks += 1;
        }
        let pairing = a.eps().mul(a.m()).unwrap();
        let chain = pairing
            .kron(&a.id())
            .unwrap()
            .mul(&a.delta().kron(&a.id()).unwrap())
            .unwrap()
            .mul(a.delta())
            .unwrap()
            .mul(a.mu())
            .unwrap();
        let k = a.handle_element();
        for (i, c) in k.coords.iter().enumerate() {
            ensure(&chain.get(i, 0) == c, || "handle via the pairing".into())?;
        }
    }
    for name in ["khovanov", "homology_s2"] {
        ensure(builtin(name).unwrap().handle_pow(2).is_zero(), || {
            format!("{name}: 𝔨² ≠ 0")
        })?;
    }
    ensure(!builtin("universal_quadratic").unwrap().handle_pow(6).is_zero(), || {
        "UQ 𝔨^6 = 0".into()
    })?;
    Ok(format!("{checks} (algebra, n) pairs"))
}

fn criterion_3() -> Outcome {
    let algs = algebras();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let start = Instant::now();
    let mut cyclic = 0;
    for round in 0..200 {
        let (n1, n2, n3) = (rng.gen_range(0..=4), rng.gen_range(1..=4), rng.gen_range(0..=4));
        let a = random_cobordism(&mut rng, &labels("a", n1), &labels("b", n2), "x", 4);
        let b = random_cobordism(&mut rng, &labels("b", n2), &labels("c", n3), "y", 4);
        if has_cycle(&b, &a) {
            cyclic += 1;
        }
        let alg = &algs[round % algs.len()];
        let lhs = DecoratedCobordism::compose(&b, &a).unwrap().tqft_eval(alg).unwrap();
        let rhs = b.tqft_eval(alg).unwrap().compose(&a.tqft_eval(alg).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("round {round}"))?;
    }
    ensure(cyclic >= 20, || format!("only {cyclic} cyclic glueings"))?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{cyclic} cyclic of 200, {t}"))
}

fn criterion_4() -> Outcome {
    let kz = builtin("khovanov").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc011);
    let (mut deleted, mut pruned) = (0, 0);
    for round in 0..100 {
        let (gz, _) = random_functor_graph(&kz, &mut rng, 5, 4, 8);
        let t = random_terminal(&gz, &mut rng);
        let gq = gz.to_ring(&Ring::Rational).unwrap();
        for g in [&gz, &gq] {
            let brute = colim_bruteforce(g).unwrap().1;
            let term = colim_terminal(g, &t, None).unwrap().1;
            ensure(brute == term, || format!("round {round} over {}", g.ring))?;
            let h = delete_left_invertible(g);
            deleted += g.edges.len() - h.edges.len();
            ensure(colim_bruteforce(&h).unwrap().1 == brute, || {
                format!("round {round}: deletion")
            })?;
        }
        // composite spans of two-edge paths, each with a true and a forged witness
        let base = edge_spans(&gz);
        let mut spans = base.clone();
        let mut witnesses = Vec::new();
        for (i, e1) in gz.edges.iter().enumerate() {
            for (j, e2) in gz.edges.iter().enumerate() {
                if e1.dst != e2.src {
                    continue;
                }
                let target = spans.len();
                spans.push(Span {
                    id: format!("{}*{}", e2.id, e1.id),
                    center: e1.map.ncols(),
                    left: (e1.src.clone(), base[i].left.1.clone()),
                    right: (e2.dst.clone(), e2.map.mul(&e1.map).unwrap()),
                });
                let forged = e1.map.scale(&Scalar::from_int(&Ring::Integer, 3)).unwrap();
                for lambda2 in [forged, e1.map.clone()] {
                    witnesses.push(PullbackWitness {
                        target,
                        first: i,
                        second: j,
                        lambda: base[i].left.1.clone(),
                        lambda2,
                    });
                }
            }
        }
        let out = pullback_reduce(&spans, &witnesses);
        pruned += out.removed.len();
        let blocks = blocks_of(&gz);
        let full = presentation_from_spans(&gz.ring, &blocks, &spans)
            .unwrap()
            .invariants()
            .unwrap();
        let kept = presentation_from_spans(&gz.ring, &blocks, &out.kept)
            .unwrap()
            .invariants()
            .unwrap();
        ensure(full == kept, || format!("round {round}: pullback pruning"))?;
    }
    Ok(format!("100 graphs, {deleted} edges deleted, {pruned} spans pruned"))
}

fn dim(g: &TunnelingGraph) -> usize {
    present(&builtin("khovanov").unwrap(), g, &Ring::Rational)
        .unwrap()
        .1
        .dimension()
}

/// The table, split into sub-lines so that each quoted value is judged on its own.
fn criterion_5() -> Vec<(String, Outcome)> {
    let mut out = Vec::new();
    let mut line = |name: &str, f: &dyn Fn() -> Result<(), String>| {
        let r = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()))
            .map(|_| String::new());
        out.push((name.to_string(), r));
    };
    line("5a (1,1): 3 for τ=1, 4 for τ≥2", &|| {
        for tau in 1..=4 {
            let d = dim(&two_vertex(&[1], &[0], &[(&[0], &[0], tau)]));
            ensure(d == if tau == 1 { 3 } else { 4 }, || format!("τ={tau}: {d}"))?;
        }
        Ok(())
    });
    line("5b (2,1) and (1,2): 5 for τ=1, 6 for τ>1", &|| {
        for tau in 1..=4 {
            let want = if tau == 1 { 5 } else { 6 };
            let d = dim(&two_vertex(&[0, 1], &[1], &[(&[0, 1], &[0], tau)]));
            ensure(d == want, || format!("(2,1) τ={tau}: {d}"))?;
            let d = dim(&two_vertex(&[1], &[0, 0], &[(&[0], &[0, 1], tau)]));
            ensure(d == want, || format!("(1,2) τ={tau}: {d}"))?;
        }
        Ok(())
    });
    line("5c (2,2) 1-partition: 6 for τ=0, 7 for τ≥1", &|| {
        let mut bad = Vec::new();
        for tau in 0..=3 {
            let d = dim(&two_vertex(&[1, 0], &[0, 0], &[(&[0, 1], &[0, 1], tau)]));
            let want = if tau == 0 { 6 } else { 7 };
            if d != want {
                bad.push(format!("τ={tau}: got {d}, quoted {want}"));
            }
        }
        ensure(bad.is_empty(), || bad.join("; "))
    });
    line("5d nondescending 2-partition closed form", &|| {
        let v = rational("khovanov");
        let mut bad = Vec::new();
        for t1 in 1..=3 {
            for t2 in 1..=3 {
                for (d1, d2) in [(0, 1), (1, 1), (2, 1)] {
                    // g1 ≥ g1' on the first part, g2 < g2' on the second
                    let g = two_vertex(&[d1, 0], &[0, d2], &[(&[0], &[0], t1), (&[1], &[1], t2)]);
                    let expected = handle_quotient(&v, t1)
                        .unwrap()
                        .repeat(2)
                        .direct_sum(&handle_quotient(&v, t2).unwrap().repeat(2))
                        .dimension();
                    let d = dim(&g);
                    if d != expected {
                        bad.push(format!("τ=({t1},{t2}) Δg=({d1},{d2}): got {d}, closed form {expected}"));
                    }
                }
            }
        }
        ensure(bad.is_empty(), || {
            format!("{} of 27 cases differ, e.g. {}", bad.len(), bad[0])
        })
    });
    out
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    for name in ["khovanov", "homology_s2"] {
        let a = rational(name);
        let r = a.rank();
        for n in 1..=3 {
            for m in 1..=3 {
                for tau in 0..=2usize {
                    for g in 0..=2usize {
                        let f = a.d_n(n).mul(&a.handle_pow(tau)).unwrap();
                        let h = a.d_n(m).mul(&a.handle_pow(g + tau)).unwrap();
                        let lhs = pushout_quotient_invariants(&f, &h).unwrap();
                        let rhs = cokernel_invariants(&f, r.pow(n as u32))
                            .unwrap()
                            .direct_sum(&ModuleInvariants::free(r.pow(m as u32)));
                        ensure(lhs == rhs, || format!("{name} n={n} m={m} τ={tau} g={g}"))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    for name in ["khovanov", "homology_s2"] {
        let a = builtin(name).unwrap();
        for g in 0..=2 {
            for parity in 0..=1 {
                let lhs = sigma_i_pipeline_dims(&a, g, parity, 4).unwrap();
                let rhs = tensor_algebra_oracle(&a, g, parity, 4).unwrap();
                ensure(lhs == rhs, || {
                    format!("{name} g={g} parity={parity}: {lhs:?} vs {rhs:?}")
                })?;
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn criterion_8() -> Outcome {
    let algs = [
        rational("khovanov"),
        builtin("universal_quadratic")
            .unwrap()
            .specialize(&[0, 0])
            .unwrap()
            .to_ring(&Ring::Rational)
            .unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xc4a1);
    for round in 0..100 {
        let g = random_connected_chain(&mut rng, 5, 3);
        for a in &algs {
            let closed = local_connected_closed_form(a, &g).unwrap();
            let presented = present(a, &g, &Ring::Rational).unwrap().1;
            ensure(closed == presented, || format!("round {round}"))?;
        }
    }
    Ok("100 chains".into())
}

fn criterion_9() -> Outcome {
    for name in ["khovanov", "homology_s2"] {
        let a = builtin(name).unwrap();
        for n in 0..=2 {
            let ideal = unorientable_graded(&a, n, 4).unwrap();
            let rewritten = rewrite::graded_dimensions(&rational(name), n, 4).unwrap();
            ensure(ideal == rewritten, || {
                format!("{name} n={n}: {ideal:?} vs {rewritten:?}")
            })?;
        }
        let m = unorientable_module(&a, 2, 0).unwrap();
        let v2 = ModuleInvariants::free(a.rank().pow(2));
        ensure(m == v2, || format!("{name}: degree 0 with n=2 is {m:?}"))?;
    }
    Ok(String::new())
}

fn criterion_10() -> Outcome {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut files: Vec<_> = std::fs::read_dir(&data)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let dir = tempfile::tempdir().unwrap();
    for f in &files {
        std::fs::copy(f, dir.path().join(f.file_name().unwrap())).unwrap();
    }
    for f in &files {
        let once = canonicalize(f, true).map_err(|e| format!("{}: {e}", f.display()))?;
        let copy = dir.path().join(f.file_name().unwrap());
        std::fs::write(&copy, &once).unwrap();
        let twice = canonicalize(&copy, true).map_err(|e| e.to_string())?;
        ensure(once == twice, || format!("{} is not a fixpoint", f.display()))?;
    }
    let status = Command::new(env!("CARGO_BIN_EXE_bnskein"))
        .args(["sigma-i", "--genus", "1", "--parity", "0", "--max-k", "4", "--oracle"])
        .output()
        .unwrap()
        .status;
    ensure(status.success(), || format!("sigma-i --oracle exited with {status}"))?;
    Ok(format!("{} files", files.len()))
}

#[test]
fn acceptance() {
    let mut lines: Vec<(String, Outcome)> = Vec::new();
    let single: [Criterion; 4] = [
        ("1 Frobenius axioms", criterion_1),
        ("2 identity suite", criterion_2),
        ("3 TQFT functoriality", criterion_3),
        ("4 colimit oracle", criterion_4),
    ];
    let rest: [Criterion; 5] = [
        ("6 pushout closed form", criterion_6),
        ("7 Σ×I dual oracle", criterion_7),
        ("8 connected closed form", criterion_8),
        ("9 unorientable dual oracle", criterion_9),
        ("10 CLI round trip", criterion_10),
    ];
    let run = |f: fn() -> Outcome| catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
    for (name, f) in single {
        lines.push((name.into(), run(f)));
    }
    let five = criterion_5();
    let all_five = five.iter().all(|(_, r)| r.is_ok());
    lines.push((
        "5 dimension table".into(),
        if all_five {
            Ok(String::new())
        } else {
            Err("see sub-lines".into())
        },
    ));
    lines.extend(five);
    for (name, f) in rest {
        lines.push((name.into(), run(f)));
    }
    for (name, r) in &lines {
        match r {
            Ok(note) if note.is_empty() => println!("criterion {name}: PASS"),
            Ok(note) => println!("criterion {name}: PASS ({note})"),
            Err(why) => println!("criterion {name}: FAIL ({why})"),
        }
    }
    let failed: Vec<&str> = lines
        .iter()
        .filter(|(_, r)| r.is_err())
        .map(|(n, _)| n.as_str())
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
