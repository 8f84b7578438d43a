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

//! Diagonal gates from graphs, hypergraphs and term lists, their
//! Fourier/Möbius compilation, and graph-state checks.

use std::collections::BTreeSet;

use num::complex::Complex64;
use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::phase::{basis_eval, moebius, walsh, BasisKind, PhaseFunction};
use crate::rational::{int, is_even_integer, Rational};
use crate::tensor::build::{gadget_diagram, hyperedge_diagram};
use crate::tensor::Diagram;

/// `e^{iπf} = e^{iπg}` iff `f(x) - g(x)` is even for every `x`.
pub fn gate_equal(f: &PhaseFunction, g: &PhaseFunction) -> Result<bool> {
    Ok(f.sub(g)?.values().iter().all(is_even_integer))
}

/// Simple undirected graph on vertices `1..=n`; each edge is stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl Graph {
    /// Repeated edges cancel, matching C-Z being an involution.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (i, j) in edges {
            if i == j {
                return Err(Error::Malformed(format!("self-loop at vertex {i}")));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::OutOfRange(format!("edge ({i}, {j}) on {n} vertices")));
            }
            g.toggle(i, j);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    /// Star with centre `1`.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for j in 2..=n {
            g.edges.insert((1, j));
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.edges.insert((i, i + 1));
        }
        g
    }

    /// Graph whose edge set is read off bit `k` of `code`, pairs in lexicographic order.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if code >> k & 1 == 1 {
                    g.edges.insert((i, j));
                }
                k += 1;
            }
        }
        g
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        let code = if pairs == 0 { 0 } else { rng.random_range(0..1u64 << pairs) };
        Graph::from_code(n, code)
    }

    pub fn from_half_adjacency(gamma: &F2Matrix) -> Result<Self> {
        if !gamma.is_strictly_upper() {
            return Err(Error::Malformed("half adjacency must be strictly upper triangular".into()));
        }
        let mut g = Graph::empty(gamma.rows());
        for i in 0..gamma.rows() {
            for j in i + 1..gamma.cols() {
                if gamma.get(i, j) {
                    g.edges.insert((i + 1, j + 1));
                }
            }
        }
        Ok(g)
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    fn toggle(&mut self, i: usize, j: usize) {
        let e = (i.min(j), i.max(j));
        if !self.edges.remove(&e) {
            self.edges.insert(e);
        }
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u == 0 || u > self.n {
            return Err(Error::OutOfRange(format!("vertex {u} of {}", self.n)));
        }
        Ok(())
    }

    pub fn neighbours(&self, u: usize) -> Vec<usize> {
        (1..=self.n).filter(|&v| v != u && self.has_edge(u, v)).collect()
    }

    pub fn neighbourhood(&self, u: usize) -> BitVec {
        let mut s = BitVec::zeros(self.n);
        for v in self.neighbours(u) {
            s.set(v, true);
        }
        s
    }
}

pub fn half_adjacency(g: &Graph) -> F2Matrix {
    let mut m = F2Matrix::zeros(g.n, g.n);
    for (i, j) in g.edges() {
        m.set(i - 1, j - 1, true);
    }
    m
}

pub fn adjacency(g: &Graph) -> F2Matrix {
    let h = half_adjacency(g);
    h.add(&h.transpose()).expect("square")
}

/// Number of edges inside the support of `x`.
pub fn graph_phasefn(g: &Graph) -> PhaseFunction {
    let n = g.n;
    PhaseFunction::from_fn(n, |x| {
        let on = |i: usize| x >> (n - i) & 1 == 1;
        int(g.edges().filter(|&(i, j)| on(i) && on(j)).count() as i64)
    })
}

pub fn graph_compose(a: &Graph, b: &Graph) -> Result<Graph> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(format!("graphs on {} and {} vertices", a.n, b.n)));
    }
    Ok(Graph {
        n: a.n,
        edges: a.edges.symmetric_difference(&b.edges).copied().collect(),
    })
}

pub fn local_complement(g: &Graph, u: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    let mut out = g.clone();
    let nb = g.neighbours(u);
    for (a, &i) in nb.iter().enumerate() {
        for &j in &nb[a + 1..] {
            out.toggle(i, j);
        }
    }
    Ok(out)
}

/// Hyperedges are nonempty vertex subsets given as supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<BitVec>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;
    fn try_from(j: HypergraphJson) -> Result<Self> {
        let mut hyperedges = Vec::new();
        for e in j.hyperedges {
            let mut s = BitVec::zeros(j.n);
            for v in e {
                if v == 0 || v > j.n {
                    return Err(Error::OutOfRange(format!("vertex {v} of {}", j.n)));
                }
                s.set(v, true);
            }
            hyperedges.push(s);
        }
        Hypergraph::new(j.n, hyperedges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        let hyperedges = h
            .hyperedges
            .iter()
            .map(|s| (1..=h.n).filter(|&i| s.get(i)).collect())
            .collect();
        HypergraphJson { n: h.n, hyperedges }
    }
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: Vec<BitVec>) -> Result<Self> {
        for s in &hyperedges {
            if s.len() != n {
                return Err(Error::DimensionMismatch(format!("hyperedge {s} on {n} vertices")));
            }
            if s.is_zero() {
                return Err(Error::Malformed("empty hyperedge".into()));
            }
        }
        Ok(Hypergraph { n, hyperedges })
    }

    pub fn hyperedges(&self) -> &[BitVec] {
        &self.hyperedges
    }
}

/// Each hyperedge is a multi-controlled Z, phase `δ_{s≤x}`.
pub fn hypergraph_phasefn(h: &Hypergraph) -> PhaseFunction {
    let n = h.n;
    PhaseFunction::from_fn(n, |x| {
        let x = BitVec::from_index(n, x);
        int(h.hyperedges.iter().filter(|s| s.is_below(&x)).count() as i64)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Gadget,
    Hyperedge,
}

impl TermKind {
    fn basis(self) -> BasisKind {
        match self {
            TermKind::Gadget => BasisKind::Omega,
            TermKind::Hyperedge => BasisKind::Xi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub support: BitVec,
    #[serde(with = "crate::rational::serde_str")]
    pub phase: Rational,
}

/// Weighted gadgets or hyperedges on `n` qubits. In JSON `n` may be left out
/// when there is at least one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TermListJson", into = "TermListJson")]
pub struct TermList {
    kind: TermKind,
    n: usize,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct TermListJson {
    kind: TermKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    terms: Vec<Term>,
}

impl TryFrom<TermListJson> for TermList {
    type Error = Error;
    fn try_from(j: TermListJson) -> Result<Self> {
        let n = match (j.n, j.terms.first()) {
            (Some(n), _) => n,
            (None, Some(t)) => t.support.len(),
            (None, None) => {
                return Err(Error::Malformed("empty term list needs `n`".into()));
            }
        };
        TermList::new(j.kind, n, j.terms)
    }
}

impl From<TermList> for TermListJson {
    fn from(t: TermList) -> Self {
        TermListJson {
            kind: t.kind,
            n: Some(t.n),
            terms: t.terms,
        }
    }
}

impl TermList {
    pub fn new(kind: TermKind, n: usize, terms: Vec<Term>) -> Result<Self> {
        for t in &terms {
            if t.support.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "support {} on {n} qubits",
                    t.support
                )));
            }
            if kind == TermKind::Gadget && t.support.is_zero() {
                return Err(Error::Malformed("phase gadget with empty support".into()));
            }
        }
        Ok(TermList { kind, n, terms })
    }

    pub fn kind(&self) -> TermKind {
        self.kind
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn terms_phasefn(t: &TermList) -> PhaseFunction {
    let basis = t.kind.basis();
    PhaseFunction::from_fn(t.n, |x| {
        let x = BitVec::from_index(t.n, x);
        t.terms
            .iter()
            .map(|term| &term.phase * basis_eval(basis, &term.support, &x).expect("same length"))
            .sum()
    })
}

/// Product of the term gates as a diagram, with `e^{iπ c}` for the constant.
pub fn terms_diagram(t: &TermList, constant: &Rational) -> Result<Diagram> {
    let mut parts = Vec::with_capacity(t.len() + 1);
    if !constant.is_zero() {
        parts.push(hyperedge_diagram(&BitVec::zeros(t.n), constant)?);
    }
    for term in &t.terms {
        parts.push(match t.kind {
            TermKind::Gadget => gadget_diagram(&term.support, &term.phase)?,
            TermKind::Hyperedge => hyperedge_diagram(&term.support, &term.phase)?,
        });
    }
    if parts.is_empty() {
        return Ok(Diagram::wire(t.n));
    }
    Diagram::chain(parts)
}

/// `f = constant + Σ terms`, exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(with = "crate::rational::serde_str")]
    pub constant: Rational,
    #[serde(flatten)]
    pub terms: TermList,
}

impl Decomposition {
    pub fn phasefn(&self) -> PhaseFunction {
        let c = self.constant.clone();
        let t = terms_phasefn(&self.terms);
        PhaseFunction::from_fn(t.qubits(), |x| t.get(x) + &c)
    }

    pub fn diagram(&self) -> Result<Diagram> {
        terms_diagram(&self.terms, &self.constant)
    }
}

fn collect_terms(kind: TermKind, coeffs: &PhaseFunction, scale: &Rational) -> TermList {
    let n = coeffs.qubits();
    let terms = (1..1u64 << n)
        .filter_map(|s| {
            let phase = coeffs.get(s) * scale;
            (!phase.is_zero()).then(|| Term {
                support: BitVec::from_index(n, s),
                phase,
            })
        })
        .collect();
    TermList { kind, n, terms }
}

/// `f = f(0) - 2 Σ_{s≠0} f̂(s) Ω_s`.
pub fn fourier_decompose(f: &PhaseFunction) -> Decomposition {
    let fh = walsh(f);
    Decomposition {
        constant: f.get(0).clone(),
        terms: collect_terms(TermKind::Gadget, &fh, &int(-2)),
    }
}

/// `f = Σ_s f̃(s) ξ_s`; the `s = 0` term is the constant.
pub fn moebius_decompose(f: &PhaseFunction) -> Decomposition {
    let ft = moebius(f);
    Decomposition {
        constant: ft.get(0).clone(),
        terms: collect_terms(TermKind::Hyperedge, &ft, &Rational::one()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalCompOutcome {
    pub holds: bool,
    pub fidelity: f64,
    /// `φ` with `rhs ≈ φ · lhs`.
    pub global_phase: [f64; 2],
}

pub const MAX_STATE_QUBITS: usize = 10;

fn graph_state(g: &Graph) -> Vec<Complex64> {
    let amp = (0.5f64).powf(g.n as f64 / 2.0);
    graph_phasefn(g)
        .values()
        .iter()
        .map(|v| Complex64::new(if is_even_integer(v) { amp } else { -amp }, 0.0))
        .collect()
}

fn apply_z(state: &mut [Complex64], n: usize, support: &BitVec, theta: f64) {
    let mask = if n == 0 { 0 } else { support.to_index() };
    for (x, a) in state.iter_mut().enumerate() {
        let k = (x as u64 & mask).count_ones() as f64;
        *a *= Complex64::from_polar(1.0, theta * k);
    }
}

// H·diag(1, e^{iθ})·H on qubit u.
fn apply_x(state: &mut [Complex64], n: usize, u: usize, theta: f64) {
    let e = Complex64::from_polar(1.0, theta);
    let one = Complex64::new(1.0, 0.0);
    let (same, flip) = ((one + e) / 2.0, (one - e) / 2.0);
    let bit = 1usize << (n - u);
    for x in 0..state.len() {
        if x & bit == 0 {
            let (a, b) = (state[x], state[x | bit]);
            state[x] = same * a + flip * b;
            state[x | bit] = flip * a + same * b;
        }
    }
}

/// `X_u(-π/2) Z_{N(u)}(π/2) G|+⟩` against `(G*u)|+⟩`, up to a global phase.
pub fn verify_local_comp(g: &Graph, u: usize, tol: f64) -> Result<LocalCompOutcome> {
    g.check_vertex(u)?;
    if g.n > MAX_STATE_QUBITS {
        return Err(Error::SizeLimit {
            node: "local complementation".into(),
            detail: format!("{} qubits, limit {MAX_STATE_QUBITS}", g.n),
        });
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut lhs = graph_state(g);
    apply_z(&mut lhs, g.n, &g.neighbourhood(u), half_pi);
    apply_x(&mut lhs, g.n, u, -half_pi);
    let rhs = graph_state(&local_complement(g, u)?);
    let inner: Complex64 = lhs.iter().zip(&rhs).map(|(a, b)| a.conj() * b).sum();
    let fidelity = inner.norm_sqr();
    let phase = if inner.norm() > 0.0 {
        inner / inner.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    Ok(LocalCompOutcome {
        holds: fidelity >= 1.0 - tol,
        fidelity,
        global_phase: [phase.re, phase.im],
    })
}

/// `G X_i = X_i Z_{N(i)} G` and `G|0⟩ = |0⟩`, as exact phase-function identities.
pub fn pauli_push_check(g: &Graph, i: usize) -> Result<bool> {
    g.check_vertex(i)?;
    let f = graph_phasefn(g);
    let n = g.n;
    let flip = 1u64 << (n - i);
    let nb = g.neighbourhood(i).to_index();
    let pushed = (0..1u64 << n).all(|x| {
        let lin = int((x & nb).count_ones() as i64);
        is_even_integer(&(f.get(x ^ flip) - f.get(x) - lin))
    });
    Ok(pushed && is_even_integer(f.get(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse, ratio};
    use crate::tensor::{eval_diagram, rules::diagonal_reference};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pf(n: usize, v: &[&str]) -> PhaseFunction {
        PhaseFunction::new(n, v.iter().map(|s| parse(s).unwrap()).collect()).unwrap()
    }

    fn term(s: &str, p: &str) -> Term {
        Term {
            support: s.parse().unwrap(),
            phase: parse(p).unwrap(),
        }
    }

    fn triangle() -> Graph {
        Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn gate_equality_is_pointwise() {
        let f = pf(2, &["0", "1/2", "1", "3/4"]);
        let two = pf(2, &["2", "2", "2", "2"]);
        assert!(gate_equal(&f, &f.add(&two).unwrap()).unwrap());
        assert!(gate_equal(&pf(1, &["0", "1"]), &pf(1, &["0", "3"])).unwrap());
        assert!(!gate_equal(&pf(1, &["0", "1"]), &pf(1, &["0", "1/2"])).unwrap());
        // Different even offsets per point still give the same gate.
        assert!(gate_equal(&pf(1, &["0", "1"]), &pf(1, &["2", "-3"])).unwrap());
        assert!(gate_equal(&pf(1, &["0", "1"]), &pf(2, &["0", "1", "0", "1"])).is_err());
    }

    #[test]
    fn half_adjacency_examples() {
        let g = Graph::new(2, [(2, 1)]).unwrap();
        assert_eq!(half_adjacency(&g), F2Matrix::from_rows(&[[0u8, 1], [0, 0]]).unwrap());
        let t = triangle();
        let h = half_adjacency(&t);
        assert!(h.is_strictly_upper());
        assert_eq!(adjacency(&t), F2Matrix::from_rows(&[[0u8, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap());
        assert_eq!(half_adjacency(&Graph::empty(3)), F2Matrix::zeros(3, 3));
        assert_eq!(Graph::from_half_adjacency(&h).unwrap(), t);
    }

    #[test]
    fn graph_phase_examples() {
        assert_eq!(graph_phasefn(&Graph::new(2, [(1, 2)]).unwrap()), pf(2, &["0", "0", "0", "1"]));
        let f = graph_phasefn(&triangle());
        for x in 0..8u64 {
            let expected = match x.count_ones() {
                3 => 3,
                2 => 1,
                _ => 0,
            };
            assert_eq!(f.get(x), &int(expected));
        }
        assert!(graph_phasefn(&Graph::empty(4)).is_zero());
    }

    #[test]
    fn graph_phase_matches_graph_operator_diagram() {
        for code in 0..64 {
            let g = Graph::from_code(4, code);
            let d = crate::tensor::graph_operator_diagram(&half_adjacency(&g)).unwrap();
            let delta = eval_diagram(&d)
                .unwrap()
                .max_abs_diff(&diagonal_reference(&graph_phasefn(&g)))
                .unwrap();
            assert!(delta < 1e-9, "{g:?}");
        }
    }

    #[test]
    fn composition() {
        let t = triangle();
        assert_eq!(graph_compose(&t, &t).unwrap(), Graph::empty(3));
        let a = Graph::new(4, [(1, 2)]).unwrap();
        let b = Graph::new(4, [(3, 4)]).unwrap();
        assert_eq!(graph_compose(&a, &b).unwrap(), Graph::new(4, [(1, 2), (3, 4)]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let (a, b) = (Graph::random(&mut rng, 5), Graph::random(&mut rng, 5));
            let sum = graph_phasefn(&a).add(&graph_phasefn(&b)).unwrap();
            assert!(gate_equal(&sum, &graph_phasefn(&graph_compose(&a, &b).unwrap())).unwrap());
        }
        assert!(graph_compose(&a, &Graph::empty(3)).is_err());
    }

    #[test]
    fn graph_json() {
        let g: Graph = serde_json::from_str(r#"{"n":3,"edges":[[2,1],[2,3]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }

    #[test]
    fn hypergraph_and_terms() {
        let h: Hypergraph = serde_json::from_str(r#"{"n":3,"hyperedges":[[1,2,3]]}"#).unwrap();
        assert_eq!(hypergraph_phasefn(&h), pf(3, &["0", "0", "0", "0", "0", "0", "0", "1"]));
        let t = TermList::new(TermKind::Gadget, 2, vec![term("11", "1/2")]).unwrap();
        assert_eq!(terms_phasefn(&t), pf(2, &["0", "1/2", "1/2", "0"]));
        let empty = TermList::new(TermKind::Hyperedge, 3, vec![]).unwrap();
        assert!(terms_phasefn(&empty).is_zero());
        assert!(TermList::new(TermKind::Gadget, 2, vec![term("00", "1")]).is_err());
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"kind":"gadget","n":2,"terms":[{"support":"11","phase":"1/2"}]}"#);
        let back: TermList =
            serde_json::from_str(r#"{"kind":"gadget","terms":[{"support":"11","phase":"1/2"}]}"#).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn fourier_examples() {
        let cz = pf(2, &["0", "0", "0", "1"]);
        let d = fourier_decompose(&cz);
        assert_eq!(d.constant, int(0));
        assert_eq!(d.terms.terms(), &[term("01", "1/2"), term("10", "1/2"), term("11", "-1/2")]);
        let single = TermList::new(TermKind::Gadget, 3, vec![term("101", "3/4")]).unwrap();
        assert_eq!(fourier_decompose(&terms_phasefn(&single)).terms, single);
        let c = fourier_decompose(&pf(2, &["5/3", "5/3", "5/3", "5/3"]));
        assert_eq!(c.constant, ratio(5, 3));
        assert!(c.terms.is_empty());
    }

    #[test]
    fn moebius_examples() {
        let cz = pf(2, &["0", "0", "0", "1"]);
        let d = moebius_decompose(&cz);
        assert_eq!(d.constant, int(0));
        assert_eq!(d.terms.terms(), &[term("11", "1")]);
        // One all-ones gadget of phase 1/4 spreads over every hyperedge.
        let n = 5;
        let g = TermList::new(TermKind::Gadget, n, vec![Term { support: BitVec::ones(n), phase: ratio(1, 4) }]).unwrap();
        let d = moebius_decompose(&terms_phasefn(&g));
        assert_eq!(d.terms.len(), (1 << n) - 1);
        for t in d.terms.terms() {
            let w = t.support.weight() as u32;
            assert_eq!(t.phase, ratio(1, 4) * int((-2i64).pow(w - 1)));
        }
        let c = moebius_decompose(&pf(1, &["7", "7"]));
        assert_eq!(c.constant, int(7));
        assert!(c.terms.is_empty());
    }

    #[test]
    fn decompositions_reconstruct_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 0..=6 {
            let f = crate::tensor::rules::random_phase_fn(&mut rng, n);
            assert_eq!(fourier_decompose(&f).phasefn(), f);
            assert_eq!(moebius_decompose(&f).phasefn(), f);
        }
    }

    #[test]
    fn compiled_terms_evaluate_to_the_gate() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for n in 1..=3 {
            let f = crate::tensor::rules::random_phase_fn(&mut rng, n);
            let reference = diagonal_reference(&f);
            for d in [fourier_decompose(&f), moebius_decompose(&f)] {
                let m = eval_diagram(&d.diagram().unwrap()).unwrap();
                assert!(m.max_abs_diff(&reference).unwrap() < 1e-9);
            }
        }
    }

    #[test]
    fn local_complement_examples() {
        assert_eq!(local_complement(&Graph::path(3), 2).unwrap(), triangle());
        for n in 2..=6 {
            assert_eq!(local_complement(&Graph::star(n), 1).unwrap(), Graph::complete(n));
        }
        let g = Graph::from_code(5, 0b1011001101);
        for u in 1..=5 {
            assert_eq!(local_complement(&local_complement(&g, u).unwrap(), u).unwrap(), g);
        }
        assert!(local_complement(&g, 6).is_err());
    }

    #[test]
    fn local_complementation_states() {
        assert!(verify_local_comp(&Graph::star(3), 1, 1e-9).unwrap().holds);
        for n in 1..=4 {
            for code in 0..1u64 << (n * (n - 1) / 2) {
                let g = Graph::from_code(n, code);
                for u in 1..=n {
                    let out = verify_local_comp(&g, u, 1e-9).unwrap();
                    assert!(out.holds, "{g:?} at {u}: {out:?}");
                }
            }
        }
        let out = verify_local_comp(&Graph::empty(3), 2, 1e-9).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn local_complementation_rejects_wrong_graph() {
        // The path itself is not the image of the path at its middle vertex.
        let g = Graph::path(3);
        let mut lhs = graph_state(&g);
        apply_z(&mut lhs, 3, &g.neighbourhood(2), std::f64::consts::FRAC_PI_2);
        apply_x(&mut lhs, 3, 2, -std::f64::consts::FRAC_PI_2);
        let rhs = graph_state(&g);
        let inner: Complex64 = lhs.iter().zip(&rhs).map(|(a, b)| a.conj() * b).sum();
        assert!(inner.norm_sqr() < 0.9);
    }

    #[test]
    fn pauli_push() {
        assert!(pauli_push_check(&triangle(), 1).unwrap());
        assert!(pauli_push_check(&Graph::empty(3), 2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..=8 {
            let g = Graph::random(&mut rng, n);
            for i in 1..=n {
                assert!(pauli_push_check(&g, i).unwrap());
            }
        }
        assert!(pauli_push_check(&triangle(), 0).is_err());
    }
}
