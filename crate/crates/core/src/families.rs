//! Named graph families: the forbidden family F3 and the blow-up templates
//! of F1 and F2.

use crate::critical::{blowup, WeightVector};
use crate::error::{Error, Result};
use crate::graphs::{complete_multipartite, contains_induced, cycle, join, parse_graph6, path, trivial_graph, Graph};
use std::fmt;
use std::sync::OnceLock;

const F3_GRAPH6: &str = include_str!("../data/f3.g6");
const F3_NAMES: &str = include_str!("../data/f3.names");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// The 49 members of F3 in catalogue order: `P_5`, `G_6,1..27`, `G_7,1..17`,
/// `G_8,1..4`.
pub fn f3_members() -> &'static [NamedGraph] {
    static MEMBERS: OnceLock<Vec<NamedGraph>> = OnceLock::new();
    MEMBERS.get_or_init(|| {
        F3_GRAPH6
            .lines()
            .zip(F3_NAMES.lines())
            .map(|(g6, name)| NamedGraph {
                name: name.trim().to_string(),
                graph: parse_graph6(g6).expect("bundled fixture is valid graph6"),
            })
            .collect()
    })
}

/// Witness that a graph contains a family member as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    /// `injection[p]` is the host vertex playing pattern vertex `p`.
    pub injection: Vec<usize>,
}

/// First F3 member (in catalogue order) occurring as an induced subgraph of
/// `g`, or `None` when `g` is F3-free.
pub fn f3_free(g: &Graph) -> Option<Witness> {
    f3_members().iter().find_map(|m| {
        contains_induced(&m.graph, g).map(|injection| Witness {
            name: m.name.clone(),
            injection,
        })
    })
}

/// How a template vertex is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    /// A clique of chosen size.
    Clique,
    /// A stable set of chosen size.
    Stable,
    /// A single vertex.
    Single,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTemplate {
    pub name: String,
    pub underlying: Graph,
    pub parts: Vec<Part>,
}

impl FamilyTemplate {
    pub fn new(name: &str, underlying: Graph, parts: Vec<Part>) -> Result<Self> {
        if parts.len() != underlying.order() {
            return Err(Error::Misaligned {
                expected: underlying.order(),
                got: parts.len(),
            });
        }
        Ok(FamilyTemplate {
            name: name.to_string(),
            underlying,
            parts,
        })
    }

    /// Vertices with a size parameter, in vertex order.
    pub fn slots(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&v| self.parts[v] != Part::Single)
            .collect()
    }

    /// Signed weights for the given slot sizes.
    pub fn weights(&self, sizes: &[usize]) -> Result<WeightVector> {
        let slots = self.slots();
        if sizes.len() != slots.len() {
            return Err(Error::Misaligned {
                expected: slots.len(),
                got: sizes.len(),
            });
        }
        let mut w = vec![1i64; self.parts.len()];
        for (k, (&v, &s)) in slots.iter().zip(sizes).enumerate() {
            if s == 0 {
                return Err(Error::ZeroWeight(k));
            }
            let s = i64::try_from(s).map_err(|_| Error::Capacity {
                requested: s,
                limit: crate::graphs::MAX_VERTICES,
            })?;
            w[v] = if self.parts[v] == Part::Clique { -s } else { s };
        }
        WeightVector::new(w)
    }
}

impl fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The blow-up of the template's underlying graph with the given slot sizes.
pub fn instantiate(template: &FamilyTemplate, sizes: &[usize]) -> Result<Graph> {
    blowup(&template.underlying, &template.weights(sizes)?)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(n, &e).expect("static template")
}

/// The prism `G_1` (no parameters).
pub fn prism() -> Graph {
    graph(
        6,
        &[(1, 4), (4, 5), (5, 2), (2, 1), (1, 3), (3, 6), (6, 4), (2, 3), (5, 6)],
    )
}

/// Underlying graph of F1^1: `v1..v3` are stable parts, `v4..v7` cliques.
pub fn f1_1_underlying() -> Graph {
    graph(
        7,
        &[
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
        ],
    )
}

/// Underlying graph of F1^2: the wheel with hub `v1` and rim `v2..v6`.
pub fn f1_2_underlying() -> Graph {
    join(&trivial_graph(1).expect("K_1"), &cycle(5).expect("C_5")).expect("wheel")
}

/// F1: the prism, F1^1 and F1^2.
pub fn f1_templates() -> Vec<FamilyTemplate> {
    use Part::*;
    vec![
        FamilyTemplate::new("G_1", prism(), vec![Single; 6]).expect("aligned"),
        FamilyTemplate::new(
            "F1^1",
            f1_1_underlying(),
            vec![Stable, Stable, Stable, Clique, Clique, Clique, Clique],
        )
        .expect("aligned"),
        FamilyTemplate::new(
            "F1^2",
            f1_2_underlying(),
            vec![Stable, Single, Single, Single, Single, Single],
        )
        .expect("aligned"),
    ]
}

/// F2: `K_{n1,n2}`, F2^1, F2^2 and F2^3 (parameter vertices first).
pub fn f2_templates() -> Vec<FamilyTemplate> {
    use Part::*;
    vec![
        FamilyTemplate::new(
            "K_{n1,n2}",
            complete_multipartite(&[1, 1]).expect("K_2"),
            vec![Stable, Stable],
        )
        .expect("aligned"),
        FamilyTemplate::new("F2^1", path(4).expect("P_4"), vec![Stable, Stable, Single, Single]).expect("aligned"),
        FamilyTemplate::new(
            "F2^2",
            graph(4, &[(4, 1), (1, 2), (2, 3)]),
            vec![Stable, Stable, Single, Single],
        )
        .expect("aligned"),
        FamilyTemplate::new(
            "F2^3",
            cycle(5).expect("C_5"),
            vec![Stable, Stable, Single, Single, Single],
        )
        .expect("aligned"),
    ]
}

/// Slot sizes of the smallest instance of `template` that contains every
/// graph with clique number `omega`, stability number `alpha` and at most
/// `n` vertices that embeds in some instance.
pub fn capped_sizes(template: &FamilyTemplate, n: usize, omega: usize, alpha: usize) -> Vec<usize> {
    template
        .slots()
        .into_iter()
        .map(|v| match template.parts[v] {
            Part::Clique => n.min(omega).max(1),
            _ => n.min(alpha).max(1),
        })
        .collect()
}

/// Is `g` an induced subgraph of an instance of one of the templates?
/// Returns the first template (in list order) and an injection into its
/// capped instance.
///
/// A part's image in `g` is a clique or a stable set of `g`, so parts are
/// capped at `min(n, ω(g))` and `min(n, α(g))`; the capped instance
/// contains every instance's induced subgraphs on `|V(g)|` vertices.
pub fn family_member(g: &Graph, templates: &[FamilyTemplate]) -> Result<Option<(FamilyTemplate, Vec<usize>)>> {
    let n = g.order();
    let (omega, alpha) = (g.clique_number(), g.stability_number());
    for t in templates {
        let host = instantiate(t, &capped_sizes(t, n, omega, alpha))?;
        if let Some(inj) = contains_induced(g, &host) {
            return Ok(Some((t.clone(), inj)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::{critical_ideal_generators, gamma, is_gamma_critical};
    use crate::graphs::{canonical_form, contains_induced_naive, enumerate_connected, VertexSet};
    use crate::groebner::ideal_equals;
    use crate::poly::parse_polynomial;
    use std::collections::HashSet;

    #[test]
    fn fixture_shape() {
        let m = f3_members();
        assert_eq!(m.len(), 49);
        assert_eq!(m[0].name, "P_5");
        assert_eq!(m[0].graph, path(5).unwrap());
        for (prefix, n, count) in [("G_6,", 6, 27), ("G_7,", 7, 17), ("G_8,", 8, 4)] {
            let group: Vec<&NamedGraph> = m.iter().filter(|x| x.name.starts_with(prefix)).collect();
            assert_eq!(group.len(), count);
            for (k, x) in group.iter().enumerate() {
                assert_eq!(x.name, format!("{prefix}{}", k + 1));
                assert_eq!(x.graph.order(), n);
                assert!(x.graph.is_connected());
            }
        }
        let forms: HashSet<_> = m.iter().map(|x| canonical_form(&x.graph).unwrap()).collect();
        assert_eq!(forms.len(), 49);
    }

    #[test]
    fn members_are_minimal_with_co_rank_four() {
        for m in f3_members() {
            assert_eq!(gamma(&m.graph).unwrap().gamma, 4, "{}", m.name);
            assert!(is_gamma_critical(&m.graph).unwrap(), "{}", m.name);
        }
    }

    #[test]
    fn freeness_examples() {
        assert_eq!(f3_free(&cycle(5).unwrap()), None);
        assert_eq!(f3_free(&path(5).unwrap()).unwrap().name, "P_5");
        let w = f3_free(&path(6).unwrap()).unwrap();
        assert_eq!(w.name, "P_5");
        let img = VertexSet::from_indices(w.injection.iter().copied());
        assert_eq!(
            canonical_form(&path(6).unwrap().induced_subgraph(img).unwrap()).unwrap(),
            canonical_form(&path(5).unwrap()).unwrap()
        );
    }

    #[test]
    fn freeness_matches_naive_oracle() {
        for n in 5..=7 {
            for g in enumerate_connected(n).unwrap() {
                let naive = f3_members()
                    .iter()
                    .find(|m| contains_induced_naive(&m.graph, &g))
                    .map(|m| m.name.clone());
                assert_eq!(f3_free(&g).map(|w| w.name), naive, "{g}");
            }
        }
    }

    #[test]
    fn instantiation() {
        let f1 = f1_templates();
        assert_eq!(instantiate(&f1[1], &[1; 7]).unwrap(), f1_1_underlying());
        assert_eq!(instantiate(&f1[2], &[1]).unwrap(), f1_2_underlying());
        let f2 = f2_templates();
        let k23 = instantiate(&f2[0], &[2, 3]).unwrap();
        assert_eq!(k23, complete_multipartite(&[2, 3]).unwrap());
        assert!(matches!(instantiate(&f2[0], &[2]), Err(Error::Misaligned { .. })));
        assert!(matches!(instantiate(&f2[0], &[2, 0]), Err(Error::ZeroWeight(1))));
        assert!(matches!(instantiate(&f2[0], &[40, 40]), Err(Error::Capacity { .. })));
        assert_eq!(instantiate(&f1[0], &[]).unwrap(), prism());
    }

    #[test]
    fn underlying_graphs_reproduce_printed_ideals() {
        let g = f1_1_underlying();
        let gens = critical_ideal_generators(&g, 4).unwrap();
        let ring = gens[0].ring();
        let printed: Vec<_> = ["2", "x1", "x2", "x3", "x4 + 1", "x5 + 1", "x6 + 1", "x7 + 1"]
            .iter()
            .map(|s| parse_polynomial(ring, s).unwrap())
            .collect();
        assert!(ideal_equals(&gens, &printed).unwrap());
    }

    #[test]
    fn small_instances_have_co_rank_at_most_three() {
        let f1 = f1_templates();
        for t in &f1[1..] {
            let k = t.slots().len();
            for code in 0..1u32 << k {
                let sizes: Vec<usize> = (0..k).map(|i| 1 + (code >> i & 1) as usize).collect();
                let g = instantiate(t, &sizes).unwrap();
                assert!(gamma(&g).unwrap().gamma <= 3, "{t} {sizes:?}");
            }
        }
        assert_eq!(gamma(&prism()).unwrap().gamma, 3);
    }

    #[test]
    fn f2_instances_embed_in_f1_1() {
        let f1 = f1_templates();
        for t in f2_templates() {
            for a in 1..=3 {
                for b in 1..=3 {
                    let g = instantiate(&t, &[a, b]).unwrap();
                    let hit = family_member(&g, &f1[1..2]).unwrap();
                    assert!(hit.is_some(), "{t} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let f1 = f1_templates();
        let host = instantiate(&f1[1], &[2; 7]).unwrap();
        for mask in [0b10_1010_1010_1011_u64, 0b11_0000_1111_0000, 0b11_1111_1111_1111] {
            let h = host.induced_subgraph(VertexSet(mask)).unwrap();
            assert!(family_member(&h, &f1).unwrap().is_some());
        }
        assert!(family_member(&complete(4), &f1).unwrap().is_some());
        assert!(family_member(&path(5).unwrap(), &f1).unwrap().is_none());
        // C_6 contains P_5, so it lies outside every F1 instance
        assert!(family_member(&cycle(6).unwrap(), &f1).unwrap().is_none());
        let (t, inj) = family_member(&cycle(4).unwrap(), &f1).unwrap().unwrap();
        assert_eq!(t.name, "G_1");
        assert_eq!(inj.len(), 4);
    }

    fn complete(n: usize) -> Graph {
        crate::graphs::complete(n).unwrap()
    }
}
