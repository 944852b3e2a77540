use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Largest order accepted by [`enumerate_connected`].
pub const ENUMERATE_MAX_VERTICES: usize = 7;

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, sorted by canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices are obtained by attaching a new vertex to a
/// nonempty subset of each class on `n - 1` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATE_MAX_VERTICES {
        return Err(Error::Capacity {
            requested: n,
            limit: ENUMERATE_MAX_VERTICES,
        });
    }
    Ok(classes(n)?.into_iter().map(|f| f.graph()).collect())
}

fn classes(n: usize) -> Result<BTreeSet<CanonicalForm>> {
    let mut out = BTreeSet::new();
    match n {
        0 => {}
        1 => {
            out.insert(canonical_form(&Graph::empty(1)?)?);
        }
        _ => {
            for base in classes(n - 1)? {
                let h = base.graph();
                let rows = h.adjacency_rows();
                for s in 1u64..1 << (n - 1) {
                    let mut adj: Vec<u64> = rows
                        .iter()
                        .enumerate()
                        .map(|(v, &r)| r | ((s >> v & 1) << (n - 1)))
                        .collect();
                    adj.push(s);
                    out.insert(canonical_form(&Graph::from_adjacency(adj)?)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    // Oracle: canonicalize every labelled graph and keep the connected ones.
    fn brute_force_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                seen.insert(canonical_form(&g).unwrap());
            }
        }
        seen.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), brute_force_count(4));
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected(5).unwrap().len(), brute_force_count(5));
    }

    #[test]
    fn six_vertices_match_brute_force() {
        let gs = enumerate_connected(6).unwrap();
        assert_eq!(gs.len(), brute_force_count(6));
        assert_eq!(gs.len(), 112);
    }

    #[test]
    fn outputs_are_distinct_connected_and_sorted() {
        let gs = enumerate_connected(5).unwrap();
        let forms: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        assert!(gs.iter().all(Graph::is_connected));
        assert!(enumerate_connected(8).is_err());
    }
}
