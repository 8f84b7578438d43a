// Copyright 2026 The szx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use num::complex::Complex64;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use szx_core::bits::BitVec;
use szx_core::f2::{cnot_synthesize, f2_matmul, replay};
use szx_core::gates::{
    fourier_decompose, graph_phasefn, local_complement, moebius_decompose, pauli_push_check,
    verify_local_comp, Graph, TermKind,
};
use szx_core::nest::{
    closed_form_s, family_de2020fast, munson_check, nest_check, nest_gadgets, nest_numeric,
    twelve_residues,
};
use szx_core::phase::{
    basis_eval, binomial_transform, expand_symmetric, kravchuk, kravchuk_transform, moebius,
    moebius_inverse, walsh, walsh_inverse, BasisKind, PhaseFunction, SymmetricPhaseFunction,
};
use szx_core::rational::{binomial, int, pow2, ratio, to_f64, Rational};
use szx_core::tensor::build::cnot_circuit_diagram;
use szx_core::tensor::rules::{random_invertible, sample_params, verify_rule};
use szx_core::tensor::{diag_diagram, eval_diagram, graph_operator_diagram, ComplexMatrix, Diagram};
use szx_core::F2Matrix;

const TOL: f64 = 1e-9;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

/// `e^{iπ f(x)}` in plain floating point.
fn phase_f64(v: &Rational) -> Complex64 {
    let t = std::f64::consts::PI * to_f64(v);
    Complex64::new(t.cos(), t.sin())
}

fn reference_diag(f: &PhaseFunction) -> ComplexMatrix {
    let d: Vec<Complex64> = f.values().iter().map(phase_f64).collect();
    ComplexMatrix::from_diagonal(&d)
}

fn dyadic_fn(rng: &mut ChaCha8Rng, n: usize) -> PhaseFunction {
    PhaseFunction::from_fn(n, |_| {
        let den = 1i64 << rng.random_range(0..4);
        ratio(rng.random_range(-4 * den..4 * den), den)
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.random_range(-50..50), rng.random_range(1..13))
}

// Dense `m^{⊗n}` applied to `f`, entry by entry.
fn dense_kron_apply(m: &[[Rational; 2]; 2], f: &PhaseFunction) -> PhaseFunction {
    let n = f.qubits();
    PhaseFunction::from_fn(n, |row| {
        let mut acc = Rational::zero();
        for col in 0..1u64 << n {
            let mut e = Rational::one();
            for q in 0..n {
                let (r, c) = ((row >> q & 1) as usize, (col >> q & 1) as usize);
                e *= &m[r][c];
            }
            acc += e * f.get(col);
        }
        acc
    })
}

fn c1_cz_semantics() -> Check {
    let gamma = F2Matrix::from_rows(&[[0u8, 1], [0, 0]]).map_err(err)?;
    let m = eval_diagram(&graph_operator_diagram(&gamma).map_err(err)?).map_err(err)?;
    let printed = ComplexMatrix::from_diagonal(&[1.0, 1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)));
    let d = m.max_abs_diff(&printed).map_err(err)?;
    ensure(d <= TOL, || format!("delta {d:e}"))?;
    Ok(format!("max_delta {d:.1e}"))
}

fn c2_scalar_cancellation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    let mut worst_scalar: f64 = 0.0;
    for i in 0..50 {
        let n = 1 + i % 4;
        let f = szx_core::tensor::rules::random_phase_fn(&mut rng, n);
        let m = eval_diagram(&diag_diagram(&f).map_err(err)?).map_err(err)?;
        let r = reference_diag(&f);
        worst = worst.max(m.max_abs_diff(&r).map_err(err)?);
        // Overall scalar: average ratio of diagonal entries.
        let s: Complex64 = (0..1usize << n).map(|x| m.get(x, x) / r.get(x, x)).sum::<Complex64>()
            / (1u64 << n) as f64;
        worst_scalar = worst_scalar.max((s - 1.0).norm());
    }
    ensure(worst <= TOL && worst_scalar <= TOL, || {
        format!("delta {worst:e}, scalar off by {worst_scalar:e}")
    })?;
    Ok(format!("50 gates, max_delta {worst:.1e}, |scalar-1| {worst_scalar:.1e}"))
}

const RULE_IDS: &[&str] = &[
    "farrow-apply",
    "farrow-erase",
    "farrow-copy",
    "farrow-dagger",
    "red-arrow-copy",
    "red-arrow-erase",
    "red-arrow-row",
    "red-arrow-column",
    "yellow-arrow-copy",
    "yellow-arrow-erase",
    "green-fusion",
    "red-fusion",
    "diag-unitary",
];

fn c3_rule_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for id in RULE_IDS {
        for size in 1..=3 {
            for _ in 0..4 {
                let p = sample_params(id, size, &mut rng).map_err(err)?;
                let out = verify_rule(id, &p, TOL).map_err(err)?;
                ensure(out.holds, || format!("{id} at size {size}: {:e}", out.max_delta))?;
                worst = worst.max(out.max_delta);
                count += 1;
            }
        }
    }
    Ok(format!("{} rules, {count} instances, max_delta {worst:.1e}", RULE_IDS.len()))
}

fn c4_transforms() -> Check {
    let w = [[ratio(1, 2), ratio(1, 2)], [ratio(1, 2), ratio(-1, 2)]];
    let m = [[int(1), int(0)], [int(-1), int(1)]];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 0..=6 {
        let f = PhaseFunction::from_fn(n, |_| random_rational(&mut rng));
        ensure(walsh(&f) == dense_kron_apply(&w, &f), || format!("walsh n={n}"))?;
        ensure(moebius(&f) == dense_kron_apply(&m, &f), || format!("moebius n={n}"))?;
    }
    for n in 0..=12 {
        let f = PhaseFunction::from_fn(n, |_| random_rational(&mut rng));
        ensure(walsh_inverse(&walsh(&f)) == f, || format!("walsh roundtrip n={n}"))?;
        ensure(moebius_inverse(&moebius(&f)) == f, || format!("moebius roundtrip n={n}"))?;
    }
    Ok("dense agreement n<=6, roundtrips n<=12".into())
}

fn rebuild(kind: BasisKind, constant: &Rational, terms: &[szx_core::gates::Term], n: usize) -> PhaseFunction {
    PhaseFunction::from_fn(n, |x| {
        let x = BitVec::from_index(n, x);
        let mut v = constant.clone();
        for t in terms {
            v += &t.phase * basis_eval(kind, &t.support, &x).unwrap();
        }
        v
    })
}

fn compile_check(transform: TermKind, seed: u64) -> Result<(f64, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut evaluated = 0;
    for i in 0..100 {
        let n = 1 + i % 6;
        let f = dyadic_fn(&mut rng, n);
        let (d, basis) = match transform {
            TermKind::Gadget => (fourier_decompose(&f), BasisKind::Omega),
            TermKind::Hyperedge => (moebius_decompose(&f), BasisKind::Xi),
        };
        let back = rebuild(basis, &d.constant, d.terms.terms(), n);
        ensure(back == f, || format!("reconstruction differs at n={n}"))?;
        if n <= 4 {
            let m = eval_diagram(&d.diagram().map_err(err)?).map_err(err)?;
            worst = worst.max(m.max_abs_diff(&reference_diag(&f)).map_err(err)?);
            evaluated += 1;
        }
    }
    ensure(worst <= TOL, || format!("tensor delta {worst:e}"))?;
    Ok((worst, evaluated))
}

fn c5_fourier() -> Check {
    let (worst, k) = compile_check(TermKind::Gadget, 5)?;
    Ok(format!("100 exact reconstructions, {k} evaluated, max_delta {worst:.1e}"))
}

fn c6_moebius() -> Check {
    let (worst, k) = compile_check(TermKind::Hyperedge, 6)?;
    let cz = PhaseFunction::new(2, vec![int(0), int(0), int(0), int(1)]).map_err(err)?;
    let d = moebius_decompose(&cz);
    let t = d.terms.terms();
    ensure(d.constant.is_zero() && t.len() == 1 && t[0].support.to_string() == "11" && t[0].phase == int(1), || {
        format!("CZ gave {t:?}")
    })?;
    Ok(format!("100 exact reconstructions, {k} evaluated, max_delta {worst:.1e}, CZ -> one hyperedge"))
}

fn c7_symmetric() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=10 {
        for _ in 0..3 {
            let f = SymmetricPhaseFunction::from_fn(n, |_| random_rational(&mut rng));
            ensure(walsh(&expand_symmetric(&f)) == expand_symmetric(&kravchuk_transform(&f)), || {
                format!("walsh/kravchuk n={n}")
            })?;
            ensure(moebius(&expand_symmetric(&f)) == expand_symmetric(&binomial_transform(&f)), || {
                format!("moebius/binomial n={n}")
            })?;
        }
    }
    for n in 0..=12usize {
        let c = |a: usize, b: usize| Rational::from_integer(binomial(a as u64, b as u64));
        let k = |a, b| kravchuk(n, a, b).unwrap();
        for a in 0..=n {
            for b in 0..=n {
                ensure(c(n, b) * k(a, b) == c(n, a) * k(b, a), || format!("reflection n={n}"))?;
                let s: Rational = (0..=n).map(|i| c(n, i) * k(a, i) * k(b, i)).sum();
                let want = if a == b { c(n, a) * pow2(n as i64) } else { int(0) };
                ensure(s == want, || format!("orthogonality n={n} k={a} l={b}"))?;
            }
        }
    }
    Ok("commutation n<=10, reflection and orthogonality n<=12".into())
}

fn c8_hyperedge_transform() -> Check {
    for n in 0..=12 {
        for beta in [int(1), ratio(1, 4), ratio(-7, 3)] {
            let h = SymmetricPhaseFunction::from_fn(n, |m| if m == n { beta.clone() } else { int(0) });
            let got = kravchuk_transform(&h);
            for m in 0..=n {
                let sign = if m % 2 == 0 { int(1) } else { int(-1) };
                let want = &beta * sign * pow2(-(n as i64));
                ensure(*got.get(m) == want, || format!("n={n} m={m}"))?;
            }
        }
    }
    Ok("n<=12, three values of beta".into())
}

fn c9_munson() -> Check {
    let alpha = ratio(1, 4);
    let g = SymmetricPhaseFunction::from_fn(8, |m| if m % 2 == 1 { alpha.clone() } else { int(0) });
    let gt = binomial_transform(&g);
    ensure(*gt.get(1) == ratio(1, 4) && *gt.get(2) == ratio(-1, 2) && *gt.get(3) == int(1), || {
        format!("G~ = {:?}", &gt.by_weight()[..4])
    })?;
    for n in 1..=16 {
        let r = munson_check(&alpha, n).map_err(err)?;
        ensure(r.is_identity, || format!("n={n} not an identity"))?;
        let expected: Vec<usize> = (1..=n.min(3)).collect();
        ensure(r.residual_weights == expected, || format!("n={n}: weights {:?}", r.residual_weights))?;
    }
    Ok("G~(1..3) = 1/4, -1/2, 1; identity for n in 1..=16".into())
}

fn c10_spider_nest() -> Check {
    for n in 4..=64 {
        let r = nest_check(&family_de2020fast(n).map_err(err)?).map_err(err)?;
        ensure(r.is_identity, || format!("n={n} not an identity"))?;
    }
    for n in 4..=24 {
        let r = nest_check(&family_de2020fast(n).map_err(err)?).map_err(err)?;
        for m in 0..=n {
            ensure(closed_form_s(n, m).map_err(err)? == r.s_values[m], || format!("closed form n={n} m={m}"))?;
        }
    }
    for n in 4..=16 {
        ensure(nest_numeric(&family_de2020fast(n).map_err(err)?).map_err(err)?, || format!("numeric n={n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..40 {
        let n = rng.random_range(1..=16);
        let s = SymmetricPhaseFunction::from_fn(n, |_| ratio(rng.random_range(-8..8), 8));
        let exact = nest_check(&s).map_err(err)?.is_identity;
        ensure(exact == nest_numeric(&s).map_err(err)?, || format!("oracle disagreement {s:?}"))?;
    }
    for (l, r, ok) in twelve_residues() {
        ensure(ok, || format!("S'({l}) = {r} mod 2"))?;
    }
    // The bare gadget product is the identity with scalar 1.
    for n in 4..=8 {
        let gadgets = nest_gadgets(&family_de2020fast(n).map_err(err)?).map_err(err)?;
        let d = szx_core::gates::terms_diagram(&gadgets, &Rational::zero()).map_err(err)?;
        let delta = eval_diagram(&d).map_err(err)?.max_abs_diff(&ComplexMatrix::identity(1 << n)).map_err(err)?;
        ensure(delta <= TOL, || format!("tensor n={n}: {delta:e}"))?;
    }
    Ok("identity n in 4..=64, closed form n<=24, oracle n<=16, 12 residues, tensor n<=8".into())
}

fn c11_graph_theorems() -> Check {
    for n in 1..=5 {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_code(n, code);
            for i in 1..=n {
                ensure(pauli_push_check(&g, i).map_err(err)?, || format!("push {g:?} at {i}"))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let n = rng.random_range(6..=8);
        let g = Graph::random(&mut rng, n);
        for i in 1..=n {
            ensure(pauli_push_check(&g, i).map_err(err)?, || format!("push {g:?} at {i}"))?;
        }
    }
    let mut pairs = 0;
    let mut min_fid: f64 = 1.0;
    let mut lc = |g: &Graph, u: usize| -> Result<(), String> {
        let out = verify_local_comp(g, u, TOL).map_err(err)?;
        min_fid = min_fid.min(out.fidelity);
        pairs += 1;
        ensure(out.holds, || format!("local complementation {g:?} at {u}: {}", out.fidelity))
    };
    for n in 1..=4 {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_code(n, code);
            for u in 1..=n {
                lc(&g, u)?;
            }
        }
    }
    for _ in 0..100 {
        let n = rng.random_range(1..=7);
        let g = Graph::random(&mut rng, n);
        lc(&g, rng.random_range(1..=n))?;
    }
    for n in 2..=7 {
        let star = Graph::star(n);
        ensure(local_complement(&star, 1).map_err(err)? == Graph::complete(n), || format!("star {n}"))?;
        for u in 1..=n {
            lc(&star, u)?;
        }
    }
    // Sanity: graph phase functions are integers.
    ensure(graph_phasefn(&Graph::complete(5)).values().iter().all(|v| v.is_integer()), || "non-integer".into())?;
    Ok(format!("{pairs} local complementations, min fidelity {min_fid:.12}"))
}

fn c12_cnot_synthesis() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let n = 1 + i % 8;
        let a = random_invertible(&mut rng, n);
        let steps = cnot_synthesize(&a).map_err(err)?;
        // Independent replay: product of transvection matrices, latest on the left.
        let mut acc = F2Matrix::identity(n);
        for s in &steps {
            let mut t = F2Matrix::identity(n);
            t.set(s.target - 1, s.source - 1, true);
            acc = f2_matmul(&t, &acc).map_err(err)?;
        }
        ensure(acc == a && replay(n, &steps).map_err(err)? == a, || format!("replay differs for {a:?}"))?;
        let lhs = eval_diagram(&Diagram::red_arrow(&a)).map_err(err)?;
        let rhs = eval_diagram(&cnot_circuit_diagram(n, &steps).map_err(err)?).map_err(err)?;
        worst = worst.max(lhs.max_abs_diff(&rhs).map_err(err)?);
    }
    ensure(worst <= TOL, || format!("semantics delta {worst:e}"))?;
    Ok(format!("100 matrices up to 8x8, max_delta {worst:.1e}"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Check, Option<Duration>);
    let criteria: [Criterion; 12] = [
        ("C-Z semantics", c1_cz_semantics, Some(Duration::from_secs(1))),
        ("well-tempered scalar cancellation", c2_scalar_cancellation, Some(Duration::from_secs(10))),
        ("rule suite", c3_rule_suite, None),
        ("transform exactness", c4_transforms, None),
        ("Fourier compilation", c5_fourier, None),
        ("Moebius compilation", c6_moebius, None),
        ("symmetric consistency", c7_symmetric, None),
        ("hyperedge transform", c8_hyperedge_transform, None),
        ("Munson identity", c9_munson, None),
        ("de2020fast spider nest", c10_spider_nest, Some(Duration::from_secs(30))),
        ("graph theorems", c11_graph_theorems, None),
        ("CNOT synthesis", c12_cnot_synthesis, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = run();
        let took = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, limit) {
            if took > *limit {
                result = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
