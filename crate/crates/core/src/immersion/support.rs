use super::{find_clique_immersion, ImmersionFlags};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An inclusion-wise minimal vertex set `M` such that `G[M]` still has a
/// `K_t`-immersion under `flags`.
///
/// Vertices are offered for deletion from the highest index down, so the set
/// keeps low-index vertices where it has a choice. A vertex whose deletion
/// fails once can never be deleted later (immersions are inherited by
/// supergraphs), so one downward pass reaches the same set as restarting the
/// scan after every deletion.
pub fn minimize_support(g: &Graph, t: usize, flags: ImmersionFlags) -> Result<VertexSet> {
    let mut witness = find_clique_immersion(g, t, flags)?.ok_or(Error::NoImmersion { t })?;
    let mut kept = g.vertices();
    for v in (0..g.n()).rev() {
        if !witness.support().contains(v) {
            kept.remove(v);
            continue;
        }
        let trial = kept.without(v);
        let (h, map) = g.induced_subgraph(trial);
        if let Some(found) = find_clique_immersion(&h, t, flags)? {
            witness = found.relabel(&map);
            kept = trial;
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_lowest_triangle_of_k5() {
        let k5 = Graph::complete(5).unwrap();
        let m = minimize_support(&k5, 3, ImmersionFlags::STRONG_ODD).unwrap();
        assert_eq!(m.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn c5_is_already_minimal() {
        let c5 = Graph::cycle(5).unwrap();
        // every 4-vertex induced subgraph of C5 is P4, which has 3 edges
        for v in 0..5 {
            let (h, _) = c5.delete_vertices(VertexSet::singleton(v));
            assert_eq!(h.edge_count(), 3);
        }
        let m = minimize_support(&c5, 3, ImmersionFlags::STRONG_ODD).unwrap();
        assert_eq!(m, c5.vertices());
    }

    #[test]
    fn single_terminal_support() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(minimize_support(&g, 1, ImmersionFlags::PLAIN).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn absent_immersion_is_an_error() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(minimize_support(&c4, 3, ImmersionFlags::ODD), Err(Error::NoImmersion { t: 3 }));
    }
}
