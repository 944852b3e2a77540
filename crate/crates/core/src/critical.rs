//! Critical ideals, the algebraic co-rank and blow-ups.
//!
//! `I_i(G)` is generated by the `i × i` minors of the generalized Laplacian
//! `L(G, X)`. Since `I_{i+1} ⊆ I_i`, the trivial ideals form an initial
//! segment `I_1, ..., I_γ` and `γ(G)` is its length.

use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexSet, MAX_VERTICES};
use crate::groebner::{self, DecisionPath, GbConfig, TrivialityConfig, Verdict};
use crate::poly::{minors_of_row_set, PolyMatrix, Polynomial, Ring};
use crate::zlinalg::smith_normal_form_i64;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

/// `L(G, X)` over `Z[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicLaplacian {
    graph: Graph,
    ring: Ring,
    matrix: PolyMatrix,
}

impl SymbolicLaplacian {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

pub fn symbolic_laplacian(g: &Graph) -> SymbolicLaplacian {
    let matrix = partial_laplacian(g, &vec![None; g.order()]);
    SymbolicLaplacian {
        graph: g.clone(),
        ring: matrix.ring(),
        matrix,
    }
}

// `L(G, X)` with `x_u` replaced by `diag[u]` where given.
fn partial_laplacian(g: &Graph, diag: &[Option<i64>]) -> PolyMatrix {
    let n = g.order();
    let ring = Ring::degrevlex(n);
    let mut entries = Vec::with_capacity(n * n);
    for (u, du) in diag.iter().enumerate() {
        for v in 0..n {
            entries.push(if u == v {
                du.map_or_else(|| ring.var(u), |c| ring.constant(c))
            } else if g.adjacent(u, v) {
                ring.constant(-1)
            } else {
                ring.zero()
            });
        }
    }
    PolyMatrix::new(ring, n, n, entries).expect("square and single-ring")
}

/// `L(G, a)` as a row-major integer matrix.
pub fn evaluated_laplacian(g: &Graph, point: &[i64]) -> Result<Vec<i64>> {
    let n = g.order();
    if point.len() != n {
        return Err(Error::PointLength {
            expected: n,
            got: point.len(),
        });
    }
    let mut m = vec![0i64; n * n];
    for u in 0..n {
        m[u * n + u] = point[u];
        for v in g.neighbors(u).iter() {
            m[u * n + v] = -1;
        }
    }
    Ok(m)
}

fn check_index(g: &Graph, i: usize) -> Result<()> {
    if i == 0 || i > g.order() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: g.order(),
        });
    }
    Ok(())
}

/// `k`-subsets of `0..n` as bitmasks, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..=n - k {
            rec(v + 1, n, k - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

enum Minors {
    Unit,
    All(Vec<Polynomial>),
}

fn enumerate_minors(m: &PolyMatrix, i: usize, stop_on_unit: bool) -> Minors {
    let n = m.rows();
    let full = VertexSet::full(n).0;
    let found = AtomicBool::new(false);
    let per_row: Vec<Vec<Polynomial>> = subsets(n, i)
        .into_par_iter()
        .map(|rows| {
            if found.load(Ordering::Relaxed) {
                return Vec::new();
            }
            let rows: Vec<usize> = VertexSet(rows).iter().collect();
            let ms: Vec<Polynomial> = minors_of_row_set(m, &rows, full).into_iter().map(|(_, p)| p).collect();
            if stop_on_unit && ms.iter().any(Polynomial::is_unit) {
                found.store(true, Ordering::Relaxed);
            }
            ms
        })
        .collect();
    if found.load(Ordering::Relaxed) {
        return Minors::Unit;
    }
    Minors::All(groebner::preprocess(per_row.into_iter().flatten().collect()))
}

/// Generators of `I_i(G)`: every nonzero `i × i` minor, sign-normalized,
/// deduplicated and sorted by (degree, term count).
pub fn critical_ideal_generators(g: &Graph, i: usize) -> Result<Vec<Polynomial>> {
    check_index(g, i)?;
    match enumerate_minors(symbolic_laplacian(g).matrix(), i, false) {
        Minors::All(v) => Ok(v),
        Minors::Unit => unreachable!("unit exit disabled"),
    }
}

/// Number of leading invariant factors equal to 1, i.e. the largest `i`
/// with `Δ_i = 1`.
fn unit_prefix(entries: &[i64], n: usize) -> usize {
    let snf = smith_normal_form_i64(entries, n, n);
    snf.factors.iter().take_while(|f| f.is_one()).count()
}

/// Seed of the pseudorandom evaluation points in [`nontriviality_points`].
pub const POINT_SEED: u64 = 0x00c0_ffee;

/// Evaluation points used to certify nontriviality: the all-zeros and
/// all-(-1) points, the degree vector, every point of `{0,-1}^n`
/// (`n ≤ 10`), every point of `{-1,0,1}^n` (`n ≤ 8`), twin-class points for
/// larger graphs and 16 pseudorandom points of `[-3,3]^n`.
///
/// A twin-class point sets vertices with a true twin to `-1`, vertices with
/// a false twin to `0`, and ranges the remaining vertices over `{0,-1}` (at
/// most 10 of them) and `{-1,0,1}` (at most 8).
pub fn nontriviality_points(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut pts = vec![vec![0; n], vec![-1; n]];
    pts.push(g.degrees().into_iter().map(|d| d as i64).collect());
    let all: Vec<Option<i64>> = vec![None; n];
    fill_grid(&mut pts, &all, 10, &[0, -1]);
    fill_grid(&mut pts, &all, 8, &[-1, 0, 1]);
    if n > 8 {
        let fixed = twin_values(g);
        fill_grid(&mut pts, &fixed, 10, &[0, -1]);
        fill_grid(&mut pts, &fixed, 8, &[-1, 0, 1]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
    for _ in 0..16 {
        pts.push((0..n).map(|_| rng.gen_range(-3..=3)).collect());
    }
    pts
}

// Appends every completion of `fixed` with free entries drawn from
// `values`, provided at most `max_free` entries are free.
fn fill_grid(pts: &mut Vec<Vec<i64>>, fixed: &[Option<i64>], max_free: usize, values: &[i64]) {
    let free: Vec<usize> = (0..fixed.len()).filter(|&v| fixed[v].is_none()).collect();
    if free.len() > max_free {
        return;
    }
    let base: Vec<i64> = fixed.iter().map(|f| f.unwrap_or(0)).collect();
    let k = values.len();
    for mut code in 0..k.pow(free.len() as u32) {
        let mut p = base.clone();
        for &v in &free {
            p[v] = values[code % k];
            code /= k;
        }
        pts.push(p);
    }
}

// -1 on vertices with a true twin, 0 on vertices with a false twin.
fn twin_values(g: &Graph) -> Vec<Option<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            let open = g.neighbors(u).0;
            let closed = open | 1 << u;
            (0..n).filter(|&v| v != u).find_map(|v| {
                let nv = g.neighbors(v).0;
                if nv | 1 << v == closed {
                    Some(-1)
                } else if nv == open {
                    Some(0)
                } else {
                    None
                }
            })
        })
        .collect()
}

/// Largest `i` such that `Δ_i(L(G, a)) = 1` at every point `a` of
/// [`nontriviality_points`]. Any ring map `Z[X] → Z` sends a trivial ideal to
/// `Z`, so every `I_j` with `j` above the bound is proper. Stops early once
/// the bound drops below `floor`.
pub fn evaluation_bound(g: &Graph, floor: usize) -> usize {
    let n = g.order();
    let mut bound = n;
    for p in nontriviality_points(g) {
        let m = evaluated_laplacian(g, &p).expect("point length matches");
        bound = bound.min(unit_prefix(&m, n));
        if bound < floor {
            break;
        }
    }
    bound
}

/// Is `I_i(G)` the unit ideal? Uses the default budget.
pub fn critical_ideal_trivial(g: &Graph, i: usize) -> Result<bool> {
    critical_ideal_verdict(g, i, &GbConfig::default()).map(|v| v.trivial)
}

/// Decides triviality of `I_i(G)`: integer evaluations of `L(G, X)` first,
/// then a unit-minor scan during minor enumeration, then the constant gcd,
/// then a strong Gröbner basis.
pub fn critical_ideal_verdict(g: &Graph, i: usize, cfg: &GbConfig) -> Result<Verdict> {
    check_index(g, i)?;
    if evaluation_bound(g, i) < i {
        return Ok(Verdict {
            trivial: false,
            path: DecisionPath::Evaluation,
        });
    }
    decide_by_minors(g, i, cfg)
}

fn decide_by_minors(g: &Graph, i: usize, cfg: &GbConfig) -> Result<Verdict> {
    decide_matrix(symbolic_laplacian(g).matrix(), i, cfg, true).map_err(|e| match e {
        Error::BudgetExhausted(msg) => Error::BudgetExhausted(format!("I_{i} of {g}: {msg}")),
        other => other,
    })
}

fn decide_matrix(m: &PolyMatrix, i: usize, cfg: &GbConfig, evaluated: bool) -> Result<Verdict> {
    let gens = match enumerate_minors(m, i, true) {
        Minors::Unit => {
            return Ok(Verdict {
                trivial: true,
                path: DecisionPath::UnitMinor,
            })
        }
        Minors::All(v) => v,
    };
    let tcfg = TrivialityConfig {
        gb: cfg.clone(),
        extra_points: Vec::new(),
        skip_evaluation: evaluated,
    };
    groebner::is_trivial_with(&gens, &tcfg)
}

/// Verdict for one index of a [`GammaReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexVerdict {
    pub index: usize,
    pub trivial: bool,
    pub path: DecisionPath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub gamma: usize,
    pub per_index: Vec<IndexVerdict>,
    pub connected: bool,
}

#[derive(Clone, Debug, Default)]
pub struct GammaOptions {
    pub gb: GbConfig,
    /// Decide every index `1..=n` instead of stopping at the first
    /// nontrivial one.
    pub exhaustive: bool,
}

/// Algebraic co-rank with default options.
pub fn gamma(g: &Graph) -> Result<GammaReport> {
    gamma_with(g, &GammaOptions::default())
}

pub fn gamma_with(g: &Graph, opts: &GammaOptions) -> Result<GammaReport> {
    let n = g.order();
    let bound = evaluation_bound(g, if opts.exhaustive { 0 } else { 1 });
    let mut per_index = Vec::new();
    let mut gamma = 0;
    for i in 1..=n {
        let v = if i > bound {
            Verdict {
                trivial: false,
                path: DecisionPath::Evaluation,
            }
        } else {
            decide_by_minors(g, i, &opts.gb)?
        };
        per_index.push(IndexVerdict {
            index: i,
            trivial: v.trivial,
            path: v.path,
        });
        if v.trivial && gamma == i - 1 {
            gamma = i;
        }
        if !v.trivial && !opts.exhaustive {
            break;
        }
    }
    Ok(GammaReport {
        gamma,
        per_index,
        connected: g.is_connected(),
    })
}

/// Does deleting any vertex strictly lower `γ`?
pub fn is_gamma_critical(g: &Graph) -> Result<bool> {
    is_gamma_critical_with(g, &GbConfig::default())
}

pub fn is_gamma_critical_with(g: &Graph, cfg: &GbConfig) -> Result<bool> {
    let n = g.order();
    if n == 0 {
        return Ok(false);
    }
    let opts = GammaOptions {
        gb: cfg.clone(),
        exhaustive: false,
    };
    let k = gamma_with(g, &opts)?.gamma;
    if k == 0 {
        return Ok(false);
    }
    // γ(G - v) < k  iff  I_k(G - v) is proper
    let drops: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|v| {
            let h = g.delete_vertex(v)?;
            if k > h.order() {
                return Ok(true);
            }
            critical_ideal_verdict(&h, k, cfg).map(|r| !r.trivial)
        })
        .collect::<Result<_>>()?;
    Ok(drops.into_iter().all(|d| d))
}

/// Nonzero vertex weights: negative for clique parts, positive for stable
/// parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        match weights.iter().position(|&w| w == 0) {
            Some(pos) => Err(Error::ZeroWeight(pos)),
            None => Ok(WeightVector(weights)),
        }
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex count of the blow-up.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|w| w.unsigned_abs()).sum()
    }
}

/// `0` for positive weights, `-1` for negative ones.
///
/// Only meaningful for `|d_v| ≥ 2`: a part of size one is the same graph
/// whatever its sign.
pub fn phi(d: &WeightVector) -> Vec<i64> {
    d.0.iter().map(|&w| if w > 0 { 0 } else { -1 }).collect()
}

fn check_weights(g: &Graph, d: &WeightVector) -> Result<()> {
    if d.len() != g.order() {
        return Err(Error::Misaligned {
            expected: g.order(),
            got: d.len(),
        });
    }
    Ok(())
}

/// Triviality of `I_j(G^d)` for `j ≤ |V(G)|` without expanding the blow-up.
///
/// Vertices with `|d_v| ≥ 2` are evaluated at `φ(d)_v`; vertices with
/// `|d_v| = 1` keep their variable. When every part has at least two
/// vertices the matrix is `L(G, φ(d))` and the answer is whether its
/// `j`-th determinantal divisor is 1; otherwise the partially evaluated
/// minors go through [`groebner::is_trivial_with`].
pub fn blowup_ideal_trivial(g: &Graph, d: &WeightVector, j: usize) -> Result<bool> {
    blowup_ideal_trivial_with(g, d, j, &GbConfig::default())
}

pub fn blowup_ideal_trivial_with(g: &Graph, d: &WeightVector, j: usize, cfg: &GbConfig) -> Result<bool> {
    check_weights(g, d)?;
    check_index(g, j)?;
    let p = phi(d);
    if d.weights().iter().all(|w| w.unsigned_abs() >= 2) {
        let m = evaluated_laplacian(g, &p)?;
        return Ok(unit_prefix(&m, g.order()) >= j);
    }
    let diag: Vec<Option<i64>> = d
        .weights()
        .iter()
        .zip(&p)
        .map(|(w, &v)| (w.unsigned_abs() >= 2).then_some(v))
        .collect();
    decide_matrix(&partial_laplacian(g, &diag), j, cfg, false).map(|v| v.trivial)
}

/// `G^d`: vertex `u` becomes a clique on `-d_u` vertices or a stable set on
/// `d_u` vertices; parts of adjacent vertices are completely joined.
pub fn blowup(g: &Graph, d: &WeightVector) -> Result<Graph> {
    check_weights(g, d)?;
    let total = d.total();
    if total > MAX_VERTICES as u64 {
        return Err(Error::Capacity {
            requested: usize::try_from(total).unwrap_or(usize::MAX),
            limit: MAX_VERTICES,
        });
    }
    let mut start = Vec::with_capacity(g.order() + 1);
    start.push(0usize);
    for &w in d.weights() {
        start.push(start.last().expect("nonempty") + w.unsigned_abs() as usize);
    }
    let mut h = Graph::empty(total as usize)?;
    for u in 0..g.order() {
        let part = start[u]..start[u + 1];
        if d.weights()[u] < 0 {
            for a in part.clone() {
                for b in a + 1..part.end {
                    h.add_edge(a, b)?;
                }
            }
        }
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            for a in part.clone() {
                for b in start[v]..start[v + 1] {
                    h.add_edge(a, b)?;
                }
            }
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, join, parse_graph6, path, trivial_graph};
    use crate::poly::parse_polynomial;
    use crate::zlinalg::{f1, laplacian, smith_normal_form};
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;
    use proptest::prelude::*;
    use rand::Rng;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 3), (3, 4), (4, 1), (1, 0), (0, 2), (2, 5), (5, 3), (1, 2), (4, 5)],
        )
        .unwrap()
    }

    #[test]
    fn laplacian_shape() {
        let lap = symbolic_laplacian(&complete(2).unwrap());
        let m = lap.matrix();
        assert_eq!(m.get(0, 0).to_string(), "x1");
        assert_eq!(m.get(0, 1).to_string(), "-1");
        let lap = symbolic_laplacian(&trivial_graph(2).unwrap());
        assert!(lap.matrix().get(0, 1).is_zero());
        let p3 = symbolic_laplacian(&path(3).unwrap());
        assert!(p3.matrix().get(0, 2).is_zero());
        assert_eq!(p3.matrix().get(2, 1).to_string(), "-1");
    }

    #[test]
    fn generators_of_small_graphs() {
        let k2 = complete(2).unwrap();
        let text = |v: Vec<Polynomial>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(text(critical_ideal_generators(&k2, 1).unwrap()), ["1", "x2", "x1"]);
        assert_eq!(text(critical_ideal_generators(&k2, 2).unwrap()), ["x1*x2 - 1"]);
        let t2 = trivial_graph(2).unwrap();
        assert_eq!(text(critical_ideal_generators(&t2, 2).unwrap()), ["x1*x2"]);
        assert!(critical_ideal_generators(&k2, 3).is_err());
        assert!(critical_ideal_generators(&k2, 0).is_err());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(subsets(3, 0), vec![0]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn named_co_ranks() {
        assert_eq!(gamma(&trivial_graph(1).unwrap()).unwrap().gamma, 0);
        for n in 2..=8 {
            assert_eq!(gamma(&complete(n).unwrap()).unwrap().gamma, 1, "K_{n}");
        }
        assert_eq!(gamma(&path(3).unwrap()).unwrap().gamma, 2);
        assert_eq!(gamma(&path(4).unwrap()).unwrap().gamma, 3);
        assert_eq!(gamma(&prism()).unwrap().gamma, 3);
        assert!(!critical_ideal_trivial(&path(3).unwrap(), 3).unwrap());
        assert!(critical_ideal_trivial(&path(3).unwrap(), 2).unwrap());
    }

    #[test]
    fn report_shape() {
        let r = gamma(&path(4).unwrap()).unwrap();
        assert!(r.connected);
        assert_eq!(r.per_index.len(), 4);
        assert!(r.per_index[..3].iter().all(|v| v.trivial));
        assert!(!r.per_index[3].trivial);
        let opts = GammaOptions {
            exhaustive: true,
            ..Default::default()
        };
        let r = gamma_with(&disjoint_pair(), &opts).unwrap();
        assert!(!r.connected);
        assert_eq!(r.per_index.len(), 4);
    }

    fn disjoint_pair() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn gamma_criticality() {
        assert!(is_gamma_critical(&path(3).unwrap()).unwrap());
        assert!(is_gamma_critical(&path(4).unwrap()).unwrap());
        assert!(!is_gamma_critical(&complete(4).unwrap()).unwrap());
        assert!(is_gamma_critical(&path(5).unwrap()).unwrap());
    }

    #[test]
    fn cricket_and_dart_are_minimal_for_two() {
        // cricket: triangle with two pendants at one vertex; dart: K_4 - e plus a pendant
        let cricket = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        let dart = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        for g in [cricket, dart] {
            assert_eq!(gamma(&g).unwrap().gamma, 3, "{g}");
            assert!(is_gamma_critical(&g).unwrap());
        }
    }

    #[test]
    fn unit_weights_stay_symbolic() {
        // evaluating K_2 at φ(1, 1) = (0, 0) would claim I_2(K_2) is trivial
        let k2 = complete(2).unwrap();
        let d = WeightVector::new(vec![1, 1]).unwrap();
        assert!(!blowup_ideal_trivial(&k2, &d, 2).unwrap());
        let m = evaluated_laplacian(&k2, &phi(&d)).unwrap();
        assert_eq!(unit_prefix(&m, 2), 2);
    }

    #[test]
    fn claw_bounds() {
        let claw = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(gamma(&claw).unwrap().gamma, 2);
        assert_eq!(f1(&claw).unwrap(), 3);
    }

    #[test]
    fn phi_and_weights() {
        let d = WeightVector::new(vec![3, 1, -2]).unwrap();
        assert_eq!(phi(&d), vec![0, 0, -1]);
        assert_eq!(WeightVector::new(vec![1, 0]), Err(Error::ZeroWeight(1)));
        let d = WeightVector::new(vec![1, 1, 1, -1, -1, -1, -1]).unwrap();
        assert_eq!(phi(&d), vec![0, 0, 0, -1, -1, -1, -1]);
    }

    #[test]
    fn blowups() {
        let k2 = complete(2).unwrap();
        let d = WeightVector::new(vec![-2, 1]).unwrap();
        assert_eq!(blowup(&k2, &d).unwrap(), complete(3).unwrap());
        let k1 = trivial_graph(1).unwrap();
        assert_eq!(
            blowup(&k1, &WeightVector::new(vec![4]).unwrap()).unwrap(),
            trivial_graph(4).unwrap()
        );
        let c5 = cycle(5).unwrap();
        assert_eq!(blowup(&c5, &WeightVector::new(vec![1; 5]).unwrap()).unwrap(), c5);
        let big = WeightVector::new(vec![40, -30]).unwrap();
        assert!(matches!(blowup(&k2, &big), Err(Error::Capacity { .. })));
        assert!(matches!(
            blowup(&k2, &WeightVector::new(vec![1]).unwrap()),
            Err(Error::Misaligned { .. })
        ));
    }

    fn g2() -> Graph {
        // v1..v3 stable parts, v4..v7 clique parts
        let edges = [
            (5, 7),
            (7, 4),
            (4, 1),
            (1, 5),
            (5, 2),
            (2, 6),
            (6, 7),
            (4, 3),
            (3, 1),
            (1, 2),
            (2, 3),
            (3, 6),
        ];
        let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Graph::from_edges(7, &e).unwrap()
    }

    fn wheel() -> Graph {
        join(&trivial_graph(1).unwrap(), &cycle(5).unwrap()).unwrap()
    }

    #[test]
    fn evaluated_blowup_examples() {
        let d = WeightVector::new(vec![2, 2, 2, -2, -2, -2, -2]).unwrap();
        assert!(!blowup_ideal_trivial(&g2(), &d, 4).unwrap());
        let m = evaluated_laplacian(&g2(), &phi(&d)).unwrap();
        assert_eq!(smith_normal_form_i64(&m, 7, 7).divisor(4), BigInt::from(2));
        let d = WeightVector::new(vec![2, 1, 1, 1, 1, 1]).unwrap();
        assert!(!blowup_ideal_trivial(&wheel(), &d, 4).unwrap());
        assert_eq!(gamma(&g2()).unwrap().gamma, 3);
        assert_eq!(gamma(&wheel()).unwrap().gamma, 3);
    }

    #[test]
    fn printed_ideals() {
        let gens = critical_ideal_generators(&g2(), 4).unwrap();
        let ring = gens[0].ring();
        let expected: Vec<Polynomial> = ["2", "x1", "x2", "x3", "x4 + 1", "x5 + 1", "x6 + 1", "x7 + 1"]
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        assert!(groebner::ideal_equals(&gens, &expected).unwrap());

        let gens = critical_ideal_generators(&wheel(), 4).unwrap();
        let ring = gens[0].ring();
        let expected: Vec<Polynomial> = [
            "x1^2 + 5*x1 + 5",
            "x1 + x2 + 3",
            "x1 + x3 + 3",
            "x1 + x4 + 3",
            "x1 + x5 + 3",
            "x1 + x6 + 3",
        ]
        .iter()
        .map(|s| parse_polynomial(ring, s).unwrap())
        .collect();
        assert!(groebner::ideal_equals(&gens, &expected).unwrap());
    }

    // Oracle for the evaluation bound: gcd of the evaluated symbolic minors.
    fn minor_gcd_at(g: &Graph, i: usize, pt: &[i64]) -> BigInt {
        critical_ideal_generators(g, i)
            .unwrap()
            .iter()
            .fold(BigInt::zero(), |acc, p| acc.gcd(&p.evaluate_i64(pt).unwrap()))
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn evaluation_commutes_with_minors(g in arb_graph(5), seed in any::<u64>()) {
            let n = g.order();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pt: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let m = evaluated_laplacian(&g, &pt).unwrap();
            let snf = smith_normal_form_i64(&m, n, n);
            for i in 1..=n {
                prop_assert_eq!(minor_gcd_at(&g, i, &pt), snf.divisor(i));
            }
        }

        #[test]
        fn triviality_is_nested(g in arb_graph(5)) {
            let n = g.order();
            let v: Vec<bool> = (1..=n).map(|i| critical_ideal_trivial(&g, i).unwrap()).collect();
            for i in 1..n {
                prop_assert!(!v[i] || v[i - 1]);
            }
            let r = gamma(&g).unwrap();
            prop_assert_eq!(r.gamma, v.iter().take_while(|&&t| t).count());
        }

        #[test]
        fn paths_agree_with_full_basis(g in arb_graph(4)) {
            for i in 1..=g.order() {
                let gens = critical_ideal_generators(&g, i).unwrap();
                let full = groebner::strong_groebner(&gens).unwrap().contains_unit();
                prop_assert_eq!(critical_ideal_trivial(&g, i).unwrap(), full);
            }
        }

        #[test]
        fn induced_subgraphs_do_not_raise_gamma(g in arb_graph(6), mask in any::<u64>()) {
            let s = VertexSet(mask & VertexSet::full(g.order()).0);
            prop_assume!(!s.is_empty());
            let h = g.induced_subgraph(s).unwrap();
            prop_assert!(gamma(&h).unwrap().gamma <= gamma(&g).unwrap().gamma);
        }

        #[test]
        fn bridge_to_critical_groups(g in arb_graph(6)) {
            prop_assume!(g.is_connected());
            let n = g.order();
            let snf = smith_normal_form(&laplacian(&g));
            for i in 1..n {
                if critical_ideal_trivial(&g, i).unwrap() {
                    prop_assert!(snf.divisor(i).is_one());
                }
            }
            prop_assert!(gamma(&g).unwrap().gamma <= f1(&g).unwrap());
        }

        #[test]
        fn blowup_matches_expanded_graph(g in arb_graph(4), raw in prop::collection::vec(prop_oneof![-2i64..=-1, 1i64..=2], 4)) {
            let d = WeightVector::new(raw[..g.order()].to_vec()).unwrap();
            prop_assume!(d.total() <= 8);
            let h = blowup(&g, &d).unwrap();
            for j in 1..=g.order() {
                prop_assert_eq!(blowup_ideal_trivial(&g, &d, j).unwrap(), critical_ideal_trivial(&h, j).unwrap());
            }
        }
    }

    #[test]
    fn parses_named_fixture() {
        let p5 = parse_graph6("DhC").unwrap();
        assert_eq!(gamma(&p5).unwrap().gamma, 4);
    }
}
