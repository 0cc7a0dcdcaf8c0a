use crate::interval::IntervalModel;

/// The leftmost maximum clique of an interval model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueInfo {
    /// Maximum clique size (= chromatic number on interval graphs).
    pub omega: usize,
    /// Members of the leftmost maximum clique, ascending by item id.
    pub clique: Vec<usize>,
    /// Largest left endpoint among clique members: the first coordinate at
    /// which `omega` intervals are simultaneously open.
    pub pi: u32,
}

/// Sweeps the endpoints in increasing coordinate order, closing before
/// opening at equal coordinates (open intervals: a shared endpoint is not an
/// overlap). The first time the open count reaches its maximum, the open set
/// is the leftmost maximum clique.
///
/// For an edgeless model (`omega == 1`) this yields the interval with the
/// smallest left endpoint, ties broken by smallest id.
pub fn leftmost_max_clique(model: &IntervalModel) -> CliqueInfo {
    assert!(!model.is_empty(), "clique of an empty model is undefined");
    let n = model.len();

    // Events: (coordinate, kind, id) with kind 0 = close, 1 = open, so closes
    // sort first at equal coordinates; opens tie-break by id.
    let mut events: Vec<(u32, u8, usize)> = Vec::with_capacity(2 * n);
    for iv in model.intervals() {
        events.push((iv.l, 1, iv.id));
        events.push((iv.r, 0, iv.id));
    }
    events.sort_unstable();

    let mut open = vec![false; n];
    let mut count = 0usize;
    let mut best = 0usize;
    let mut clique: Vec<usize> = Vec::new();
    let mut pi = 0u32;
    for (coord, kind, id) in events {
        if kind == 0 {
            open[id] = false;
            count -= 1;
        } else {
            open[id] = true;
            count += 1;
            if count > best {
                best = count;
                pi = coord;
                clique.clear();
                clique.extend((0..n).filter(|&i| open[i]));
            }
        }
    }
    debug_assert_eq!(clique.len(), best);
    CliqueInfo {
        omega: best,
        clique,
        pi,
    }
}

/// Chromatic number of the intersection graph: equals the maximum clique
/// size because interval graphs are perfect.
pub fn chromatic_number(model: &IntervalModel) -> usize {
    leftmost_max_clique(model).omega
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_conflict_graph;
    use crate::graph::ConflictGraph;

    /// Exhaustive maximum clique over all vertex subsets.
    fn brute_force_omega(g: &ConflictGraph) -> usize {
        let n = g.len();
        assert!(n <= 20);
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let is_clique = members
                .iter()
                .enumerate()
                .all(|(k, &u)| members[k + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                best = best.max(members.len());
            }
        }
        best
    }

    /// Smallest k admitting a proper k-coloring, by exhaustive assignment.
    fn brute_force_chromatic(g: &ConflictGraph) -> usize {
        let n = g.len();
        assert!(n <= 10);
        if n == 0 {
            return 0;
        }
        'k: for k in 1..=n {
            let mut color = vec![0usize; n];
            loop {
                let proper = (0..n)
                    .all(|u| g.neighbors(u).iter().all(|&v| v <= u || color[u] != color[v]));
                if proper {
                    return k;
                }
                // next assignment in base k
                let mut i = 0;
                loop {
                    if i == n {
                        continue 'k;
                    }
                    color[i] += 1;
                    if color[i] < k {
                        break;
                    }
                    color[i] = 0;
                    i += 1;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn disjoint_intervals_have_omega_one() {
        let model = IntervalModel::new(vec![(4, 5), (0, 1), (2, 3)]);
        let info = leftmost_max_clique(&model);
        assert_eq!(info.omega, 1);
        assert_eq!(info.clique, vec![1]); // smallest left endpoint
        assert_eq!(info.pi, 0);
        assert_eq!(chromatic_number(&model), 1);
    }

    #[test]
    fn omega_one_picks_the_earliest_interval() {
        let model = IntervalModel::new(vec![(0, 1), (5, 6), (2, 3)]);
        let info = leftmost_max_clique(&model);
        assert_eq!(info.clique, vec![0]);
        assert_eq!(info.pi, model.interval(0).l);
    }

    #[test]
    fn spec_model_has_leftmost_triangle() {
        let model = IntervalModel::new(vec![(0, 4), (1, 5), (2, 3), (6, 8)]);
        let info = leftmost_max_clique(&model);
        assert_eq!(info.omega, 3);
        assert_eq!(info.clique, vec![0, 1, 2]);
        assert_eq!(info.pi, 2);
        assert_eq!(chromatic_number(&model), 3);
        assert_eq!(brute_force_omega(&build_conflict_graph(&model)), 3);
    }

    #[test]
    fn identical_intervals_form_one_clique() {
        let model = IntervalModel::new(vec![(0, 10); 4]);
        let info = leftmost_max_clique(&model);
        assert_eq!(info.omega, 4);
        assert_eq!(info.pi, 0);
        assert_eq!(chromatic_number(&model), 4);
    }

    #[test]
    fn shared_endpoints_do_not_inflate_the_clique() {
        // (0,2) and (2,4) only touch; with (1,3) the max clique is 2.
        let model = IntervalModel::new(vec![(0, 2), (1, 3), (2, 4)]);
        let info = leftmost_max_clique(&model);
        assert_eq!(info.omega, 2);
        assert_eq!(info.clique, vec![0, 1]);
        assert_eq!(info.pi, 1);
    }

    #[test]
    fn sweep_omega_matches_brute_force_on_small_models() {
        let models = vec![
            vec![(0, 4), (1, 5), (2, 3), (6, 8), (3, 7), (5, 6)],
            vec![(0, 1), (0, 2), (1, 4), (2, 3), (3, 5), (2, 5)],
            vec![(0, 9), (1, 2), (1, 3), (2, 4), (3, 6), (5, 8), (6, 7)],
        ];
        for endpoints in models {
            let model = IntervalModel::new(endpoints);
            let g = build_conflict_graph(&model);
            assert_eq!(leftmost_max_clique(&model).omega, brute_force_omega(&g));
            if model.len() <= 10 {
                assert_eq!(chromatic_number(&model), brute_force_chromatic(&g));
            }
        }
    }

    #[test]
    fn clique_members_pairwise_intersect() {
        let model = IntervalModel::new(vec![(0, 4), (1, 5), (2, 3), (2, 8), (6, 8)]);
        let info = leftmost_max_clique(&model);
        for (k, &u) in info.clique.iter().enumerate() {
            for &v in &info.clique[k + 1..] {
                assert!(crate::interval::intersects(
                    model.interval(u),
                    model.interval(v)
                ));
            }
        }
        assert_eq!(
            info.pi,
            info.clique
                .iter()
                .map(|&i| model.interval(i).l)
                .max()
                .unwrap()
        );
    }
}
