use super::{write_graph6, Graph};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Largest graph accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 9;

/// Isomorphism-invariant key of a graph: the graph6 encoding of the relabeling
/// whose upper-triangle bitstring (graph6 column order) is lexicographically
/// smallest. Byte order on keys of equal order matches bitstring order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn to_hex(&self) -> String {
        self.0.bytes().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(hex: &str) -> Option<Self> {
        if !hex.len().is_multiple_of(2) {
            return None;
        }
        let bytes = (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(hex.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()?;
        String::from_utf8(bytes).ok().map(CanonicalForm)
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        super::parse_graph6(&self.0).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    // column j holds adjacency of position j to positions 0..j, position 0 as MSB
    cur: Vec<u64>,
    order: Vec<usize>,
    best: Vec<u64>,
    best_order: Vec<usize>,
    have_best: bool,
}

impl Search<'_> {
    fn column(&self, j: usize, v: usize) -> u64 {
        let row = self.g.adjacency_rows()[v];
        let mut col = 0u64;
        for &u in &self.order[..j] {
            col = (col << 1) | (row >> u & 1);
        }
        col
    }

    // Returns true when `best` was replaced somewhere below this node.
    fn dfs(&mut self, j: usize, used: u64, mut state: Ordering) -> bool {
        if j == self.n {
            if !self.have_best || state == Ordering::Less {
                self.best.copy_from_slice(&self.cur);
                self.best_order.copy_from_slice(&self.order);
                self.have_best = true;
                return true;
            }
            return false;
        }
        let mut updated = false;
        let mut free = !used & super::VertexSet::full(self.n).0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            self.order[j] = v;
            let col = self.column(j, v);
            let child = match (self.have_best, state) {
                (false, _) | (_, Ordering::Less) => Ordering::Less,
                _ => col.cmp(&self.best[j]),
            };
            if child == Ordering::Greater {
                continue;
            }
            self.cur[j] = col;
            if self.dfs(j + 1, used | (1 << v), child) {
                updated = true;
                // the new best shares this node's prefix
                state = Ordering::Equal;
            }
        }
        updated
    }
}

/// Canonical form by exhaustive search over vertex orderings, pruned by
/// comparing partial bitstrings against the best ordering found so far.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Capacity {
            requested: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let mut s = Search {
        g,
        n,
        cur: vec![0; n],
        order: vec![0; n],
        best: vec![0; n],
        best_order: vec![0; n],
        have_best: false,
    };
    s.dfs(0, 0, Ordering::Equal);
    // best_order[pos] = original vertex; permute wants original -> pos
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(CanonicalForm(write_graph6(&g.permute(&perm))))
}
