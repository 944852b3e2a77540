use super::Graph;

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    host_deg: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, k: usize, used: u64) -> bool {
        if k == self.order.len() {
            return true;
        }
        let p = self.order[k];
        let need = self.pattern.degree(p);
        let mut cand = !used & self.host.vertices().0;
        for &q in &self.order[..k] {
            let hq = self.host.adjacency_rows()[self.map[q]];
            cand &= if self.pattern.adjacent(p, q) { hq } else { !hq };
        }
        while cand != 0 {
            let h = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host_deg[h] < need {
                continue;
            }
            self.map[p] = h;
            if self.extend(k + 1, used | (1 << h)) {
                return true;
            }
        }
        false
    }
}

/// Searches for an induced copy of `pattern` in `host`.
///
/// Returns `map` with `map[p]` the host vertex playing pattern vertex `p`.
/// Pattern vertices are placed in order of descending degree (ties by
/// index); candidates are filtered by adjacency to already placed vertices
/// and by host degree.
pub fn contains_induced(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut m = Matcher {
        pattern,
        host,
        order,
        map: vec![0; k],
        host_deg: host.degrees(),
    };
    m.extend(0, 0).then_some(m.map)
}

/// Exhaustive check over every `|pattern|`-subset of the host, comparing
/// canonical forms. Only usable for patterns within the canonical-form cap.
pub fn contains_induced_naive(pattern: &Graph, host: &Graph) -> bool {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return false;
    }
    let target = match super::canonical_form(pattern) {
        Ok(f) => f,
        Err(_) => return false,
    };
    let mut found = false;
    for_each_subset(n, k, &mut |s| {
        if !found {
            let sub = host.induced_subgraph(super::VertexSet(s)).expect("subset in range");
            found = super::canonical_form(&sub).ok().as_ref() == Some(&target);
        }
    });
    found
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=n - left {
            rec(v + 1, n, left - 1, acc | (1 << v), f);
        }
    }
    rec(0, n, k, 0, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{canonical_form, complete, complete_multipartite, cycle, path, VertexSet};

    fn check(pattern: &Graph, host: &Graph) -> bool {
        match contains_induced(pattern, host) {
            Some(map) => {
                let mut seen = VertexSet::EMPTY;
                for &h in &map {
                    assert!(!seen.contains(h), "map is not injective");
                    seen.insert(h);
                }
                for p in 0..pattern.order() {
                    for q in 0..pattern.order() {
                        assert_eq!(pattern.adjacent(p, q), host.adjacent(map[p], map[q]));
                    }
                }
                let image = host.induced_subgraph(seen).unwrap();
                assert_eq!(canonical_form(&image).unwrap(), canonical_form(pattern).unwrap());
                true
            }
            None => false,
        }
    }

    #[test]
    fn examples() {
        assert!(check(&path(3).unwrap(), &path(4).unwrap()));
        assert!(!check(&complete(3).unwrap(), &complete_multipartite(&[3, 3]).unwrap()));
        assert!(!check(&path(5).unwrap(), &cycle(5).unwrap()));
        assert!(check(&cycle(5).unwrap(), &cycle(5).unwrap()));
        assert!(!check(&path(4).unwrap(), &path(3).unwrap()));
        assert!(check(&Graph::empty(0).unwrap(), &path(2).unwrap()));
    }

    #[test]
    fn agrees_with_naive_on_small_hosts() {
        let patterns = [
            path(3).unwrap(),
            path(4).unwrap(),
            complete(3).unwrap(),
            cycle(4).unwrap(),
        ];
        for host in [
            cycle(6).unwrap(),
            path(6).unwrap(),
            complete_multipartite(&[2, 2, 2]).unwrap(),
        ] {
            for p in &patterns {
                assert_eq!(check(p, &host), contains_induced_naive(p, &host), "{p:?} in {host:?}");
            }
        }
    }
}
