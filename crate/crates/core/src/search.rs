//! Batch pipelines over graph streams: minimal forbidden graphs for
//! `Γ≤k` and the small-order classification checks.

use crate::critical::{critical_ideal_verdict, gamma_with, is_gamma_critical_with, GammaOptions};
use crate::error::{Error, Result};
use crate::families::{f1_templates, f2_templates, f3_free, family_member};
use crate::graphs::{
    canonical_form, contains_induced, enumerate_connected, parse_graph6_lines, write_graph6, Graph, CANON_MAX_VERTICES,
};
use crate::groebner::GbConfig;
use rayon::prelude::*;
use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

/// A minimal forbidden graph found by [`find_minimal_forbidden`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hit {
    pub graph6: String,
    pub gamma: usize,
    pub gamma_critical: bool,
}

impl Hit {
    /// `graph6<TAB>gamma<TAB>critical|-`
    pub fn tsv(&self) -> String {
        let flag = if self.gamma_critical { "critical" } else { "-" };
        format!("{}\t{}\t{}", self.graph6, self.gamma, flag)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchReport {
    /// Graphs taken from the stream, including pruned and resumed ones.
    pub processed: usize,
    /// Hits sorted by (order, graph6), one per isomorphism class.
    pub hits: Vec<Hit>,
    pub skipped_by_pruning: usize,
    /// Graphs skipped because the checkpoint already listed them.
    pub resumed: usize,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Skip graphs containing a smaller hit.
    pub prune: bool,
    /// Append-only file of processed canonical forms (hex, one per line);
    /// hits go to the same path with `.hits` appended.
    pub checkpoint: Option<PathBuf>,
    pub gb: GbConfig,
    /// Graphs per checkpoint flush.
    pub chunk: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            checkpoint: None,
            gb: GbConfig::default(),
            chunk: 256,
        }
    }
}

/// Reads graph6 lines from a file.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    parse_graph6_lines(&std::fs::read_to_string(path)?)
}

/// Connected graphs on `1..=n_max` vertices, one per isomorphism class.
pub fn connected_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

/// Isomorphism-invariant key: the canonical form for small graphs, the
/// graph6 string as given otherwise.
fn key(g: &Graph) -> String {
    if g.order() <= CANON_MAX_VERTICES {
        canonical_form(g).expect("within capacity").to_hex()
    } else {
        hex(write_graph6(g).as_bytes())
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn tag(g: &Graph, e: Error) -> Error {
    match e {
        Error::BudgetExhausted(msg) if !msg.contains(&g.to_string()) => Error::BudgetExhausted(format!("{g}: {msg}")),
        other => other,
    }
}

/// `γ(g) ≥ k+1` and `γ(g - v) ≤ k` for every vertex `v`.
pub fn is_minimal_forbidden(g: &Graph, k: usize, cfg: &GbConfig) -> Result<bool> {
    let n = g.order();
    if n < k + 1 || !critical_ideal_verdict(g, k + 1, cfg)?.trivial {
        return Ok(false);
    }
    for v in 0..n {
        let h = g.delete_vertex(v)?;
        if h.order() > k && critical_ideal_verdict(&h, k + 1, cfg)?.trivial {
            return Ok(false);
        }
    }
    Ok(true)
}

fn make_hit(g: &Graph, cfg: &GbConfig) -> Result<Hit> {
    let opts = GammaOptions {
        gb: cfg.clone(),
        exhaustive: false,
    };
    Ok(Hit {
        graph6: g.to_string(),
        gamma: gamma_with(g, &opts)?.gamma,
        gamma_critical: is_gamma_critical_with(g, cfg)?,
    })
}

struct Checkpoint {
    done: HashSet<String>,
    hits: HashSet<String>,
    processed: BufWriter<File>,
    hit_log: BufWriter<File>,
}

impl Checkpoint {
    fn open(path: &Path) -> Result<Self> {
        let hits_path = hits_path(path);
        let read = |p: &Path| -> Result<HashSet<String>> {
            match std::fs::read_to_string(p) {
                Ok(s) => Ok(s
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(String::from)
                    .collect()),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(HashSet::new()),
                Err(e) => Err(e.into()),
            }
        };
        let append = |p: &Path| -> Result<BufWriter<File>> {
            Ok(BufWriter::new(OpenOptions::new().create(true).append(true).open(p)?))
        };
        Ok(Checkpoint {
            done: read(path)?,
            hits: read(&hits_path)?,
            processed: append(path)?,
            hit_log: append(&hits_path)?,
        })
    }

    fn record(&mut self, keys: &[String], hits: &[String]) -> Result<()> {
        // hits first, so a crash never leaves a processed hit unrecorded
        for h in hits {
            writeln!(self.hit_log, "{h}")?;
        }
        self.hit_log.flush()?;
        for k in keys {
            writeln!(self.processed, "{k}")?;
        }
        self.processed.flush()?;
        Ok(())
    }
}

/// Path of the hit log belonging to a checkpoint file.
pub fn hits_path(checkpoint: &Path) -> PathBuf {
    let mut s = checkpoint.as_os_str().to_owned();
    s.push(".hits");
    PathBuf::from(s)
}

/// Minimal forbidden graphs for `Γ≤k` in a stream.
///
/// Graphs are processed in order of increasing vertex count (each order in
/// parallel), so pruning only consults hits on fewer vertices and the hit set
/// does not depend on the stream order.
pub fn find_minimal_forbidden(stream: Vec<Graph>, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut graphs = stream;
    graphs.sort_by_key(Graph::order);
    let mut ckpt = opts.checkpoint.as_deref().map(Checkpoint::open).transpose()?;
    let mut report = SearchReport::default();
    let mut found: Vec<(String, Graph)> = Vec::new();
    if let Some(c) = &ckpt {
        let mut seen = HashSet::new();
        for g in &graphs {
            let key = key(g);
            if c.hits.contains(&key) && seen.insert(key.clone()) {
                found.push((key, g.clone()));
            }
        }
    }
    let mut start = 0;
    while start < graphs.len() {
        let n = graphs[start].order();
        let end = start + graphs[start..].iter().take_while(|g| g.order() == n).count();
        let smaller: Vec<Graph> = found
            .iter()
            .filter(|(_, h)| h.order() < n)
            .map(|(_, h)| h.clone())
            .collect();
        for chunk in graphs[start..end].chunks(opts.chunk.max(1)) {
            let keys: Vec<String> = chunk.par_iter().map(key).collect();
            let outcome: Vec<Outcome> = chunk
                .par_iter()
                .zip(&keys)
                .map(|(g, key)| {
                    if ckpt.as_ref().is_some_and(|c| c.done.contains(key)) {
                        return Ok(Outcome::Resumed);
                    }
                    if opts.prune && smaller.iter().any(|h| contains_induced(h, g).is_some()) {
                        return Ok(Outcome::Pruned);
                    }
                    is_minimal_forbidden(g, k, &opts.gb)
                        .map(|hit| if hit { Outcome::Hit } else { Outcome::Miss })
                        .map_err(|e| tag(g, e))
                })
                .collect::<Result<_>>()?;
            let mut new_keys = Vec::new();
            let mut new_hits = Vec::new();
            for ((g, key), o) in chunk.iter().zip(keys).zip(outcome) {
                report.processed += 1;
                match o {
                    Outcome::Resumed => report.resumed += 1,
                    Outcome::Pruned => report.skipped_by_pruning += 1,
                    Outcome::Miss => {}
                    Outcome::Hit => {
                        if !found.iter().any(|(k, _)| *k == key) {
                            found.push((key.clone(), g.clone()));
                        }
                        new_hits.push(key.clone());
                    }
                }
                if !matches!(o, Outcome::Resumed) {
                    new_keys.push(key);
                }
            }
            if let Some(c) = ckpt.as_mut() {
                c.record(&new_keys, &new_hits)?;
            }
        }
        start = end;
    }
    let mut hits: Vec<Hit> = found
        .par_iter()
        .map(|(_, g)| make_hit(g, &opts.gb).map_err(|e| tag(g, e)))
        .collect::<Result<_>>()?;
    hits.sort_by(|a, b| (a.graph6.len(), &a.graph6).cmp(&(b.graph6.len(), &b.graph6)));
    report.hits = hits;
    Ok(report)
}

#[derive(Clone, Copy)]
enum Outcome {
    Resumed,
    Pruned,
    Hit,
    Miss,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmegaReport {
    pub omega: usize,
    pub n_max: usize,
    /// Connected graphs with the requested clique number.
    pub checked: usize,
    /// How many of them are F3-free.
    pub f3_free: usize,
    /// Graphs where F3-freeness and family membership disagree (graph6).
    pub counterexamples: Vec<String>,
}

/// For every connected graph on at most `n_max` vertices with clique
/// number `omega`, checks that it is F3-free exactly when it is an induced
/// subgraph of an F2 instance (`omega = 2`) or an F1 instance (`omega = 3`).
pub fn verify_omega_classification(n_max: usize, omega: usize) -> Result<OmegaReport> {
    let templates = match omega {
        2 => f2_templates(),
        3 => f1_templates(),
        _ => return Err(Error::InvalidArgument(format!("clique number {omega} is not 2 or 3"))),
    };
    let graphs: Vec<Graph> = connected_up_to(n_max)?
        .into_iter()
        .filter(|g| g.clique_number() == omega)
        .collect();
    let rows: Vec<(bool, bool)> = graphs
        .par_iter()
        .map(|g| Ok((f3_free(g).is_none(), family_member(g, &templates)?.is_some())))
        .collect::<Result<_>>()?;
    Ok(OmegaReport {
        omega,
        n_max,
        checked: graphs.len(),
        f3_free: rows.iter().filter(|r| r.0).count(),
        counterexamples: graphs
            .iter()
            .zip(&rows)
            .filter(|(_, (free, member))| free != member)
            .map(|(g, _)| g.to_string())
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub graph6: String,
    pub gamma: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaF3Report {
    pub n_max: usize,
    pub checked: usize,
    /// Graphs with `γ ≤ 3`.
    pub in_class: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// For every connected graph on at most `n_max` vertices, checks
/// `γ(g) ≤ 3 ⟺ g is F3-free`. `γ ≤ 3` is decided directly from `I_4`.
pub fn verify_gamma_equals_f3_free(n_max: usize, cfg: &GbConfig) -> Result<GammaF3Report> {
    let graphs = connected_up_to(n_max)?;
    let rows: Vec<(bool, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let low = g.order() < 4 || !critical_ideal_verdict(g, 4, cfg).map_err(|e| tag(g, e))?.trivial;
            Ok((low, f3_free(g).map(|w| w.name)))
        })
        .collect::<Result<_>>()?;
    let mut discrepancies = Vec::new();
    for (g, (low, witness)) in graphs.iter().zip(&rows) {
        if *low != witness.is_none() {
            let opts = GammaOptions {
                gb: cfg.clone(),
                exhaustive: false,
            };
            discrepancies.push(Discrepancy {
                graph6: g.to_string(),
                gamma: gamma_with(g, &opts)?.gamma,
                witness: witness.clone(),
            });
        }
    }
    Ok(GammaF3Report {
        n_max,
        checked: graphs.len(),
        in_class: rows.iter().filter(|r| r.0).count(),
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::gamma;
    use crate::families::f3_members;
    use crate::graphs::{parse_graph6, path};
    use proptest::prelude::*;

    fn canon_set(hits: &[Hit]) -> HashSet<String> {
        hits.iter().map(|h| key(&parse_graph6(&h.graph6).unwrap())).collect()
    }

    #[test]
    fn forbidden_for_one() {
        let r = find_minimal_forbidden(connected_up_to(5).unwrap(), 1, &SearchOptions::default()).unwrap();
        assert_eq!(canon_set(&r.hits), HashSet::from([key(&path(3).unwrap())]));
        assert_eq!(r.processed, 1 + 1 + 2 + 6 + 21);
        assert!(r.skipped_by_pruning > 0);
        assert_eq!(r.hits[0].gamma, 2);
        assert!(r.hits[0].gamma_critical);
    }

    #[test]
    fn forbidden_for_two() {
        let mut stream = enumerate_connected(4).unwrap();
        stream.extend(enumerate_connected(5).unwrap());
        let r = find_minimal_forbidden(stream, 2, &SearchOptions::default()).unwrap();
        let hits = canon_set(&r.hits);
        let cricket = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        let dart = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        for g in [path(4).unwrap(), cricket, dart] {
            assert!(hits.contains(&key(&g)), "{g}");
        }
        for h in &r.hits {
            let g = parse_graph6(&h.graph6).unwrap();
            assert_eq!(gamma(&g).unwrap().gamma, 3);
        }
    }

    #[test]
    fn forbidden_for_three_on_five_vertices() {
        let r = find_minimal_forbidden(enumerate_connected(5).unwrap(), 3, &SearchOptions::default()).unwrap();
        assert_eq!(canon_set(&r.hits), HashSet::from([key(&path(5).unwrap())]));
    }

    #[test]
    fn forbidden_for_three_matches_f3_up_to_six() {
        let r = find_minimal_forbidden(connected_up_to(6).unwrap(), 3, &SearchOptions::default()).unwrap();
        let expected: HashSet<String> = f3_members()
            .iter()
            .filter(|m| m.graph.order() <= 6)
            .map(|m| key(&m.graph))
            .collect();
        assert_eq!(expected.len(), 28);
        assert_eq!(canon_set(&r.hits), expected);
    }

    #[test]
    fn pruning_does_not_change_hits() {
        for k in 1..=3 {
            let with = find_minimal_forbidden(connected_up_to(6).unwrap(), k, &SearchOptions::default()).unwrap();
            let opts = SearchOptions {
                prune: false,
                ..Default::default()
            };
            let without = find_minimal_forbidden(connected_up_to(6).unwrap(), k, &opts).unwrap();
            assert_eq!(with.hits, without.hits, "k = {k}");
            assert_eq!(without.skipped_by_pruning, 0);
        }
    }

    #[test]
    fn checkpoint_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ckpt.txt");
        let opts = SearchOptions {
            checkpoint: Some(path.clone()),
            chunk: 7,
            ..Default::default()
        };
        let first = find_minimal_forbidden(connected_up_to(5).unwrap(), 2, &opts).unwrap();
        assert_eq!(first.resumed, 0);
        let lines = std::fs::read_to_string(&path).unwrap().lines().count();
        assert_eq!(lines, first.processed);
        let second = find_minimal_forbidden(connected_up_to(5).unwrap(), 2, &opts).unwrap();
        assert_eq!(second.resumed, second.processed);
        assert_eq!(second.hits, first.hits);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), lines);
    }

    #[test]
    fn rejects_zero_k() {
        assert!(find_minimal_forbidden(Vec::new(), 0, &SearchOptions::default()).is_err());
    }

    #[test]
    fn omega_classification() {
        let r = verify_omega_classification(3, 2).unwrap();
        assert!(r.counterexamples.is_empty());
        assert_eq!(r.checked, 2);
        let r = verify_omega_classification(5, 2).unwrap();
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        let r = verify_omega_classification(6, 3).unwrap();
        assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples);
        assert!(verify_omega_classification(4, 4).is_err());
    }

    #[test]
    fn gamma_matches_f3_freeness() {
        let r = verify_gamma_equals_f3_free(6, &GbConfig::default()).unwrap();
        assert_eq!(r.checked, 1 + 1 + 2 + 6 + 21 + 112);
        assert!(r.discrepancies.is_empty(), "{:?}", r.discrepancies);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn stream_order_is_irrelevant(seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut stream = connected_up_to(5).unwrap();
            let base = find_minimal_forbidden(stream.clone(), 2, &SearchOptions::default()).unwrap();
            stream.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let shuffled = find_minimal_forbidden(stream, 2, &SearchOptions::default()).unwrap();
            prop_assert_eq!(base.hits, shuffled.hits);
        }

        #[test]
        fn hits_satisfy_the_definition(k in 1usize..=3) {
            let r = find_minimal_forbidden(connected_up_to(5).unwrap(), k, &SearchOptions::default()).unwrap();
            for h in &r.hits {
                let g = parse_graph6(&h.graph6).unwrap();
                prop_assert!(gamma(&g).unwrap().gamma > k);
                for v in 0..g.order() {
                    prop_assert!(gamma(&g.delete_vertex(v).unwrap()).unwrap().gamma <= k);
                }
            }
        }
    }
}
