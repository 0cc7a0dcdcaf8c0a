//! The two-phase balance-and-repair heuristic for BPPC on interval models.
//!
//! Phase I builds a proper coloring with exactly `λ = max{⌈Σw/B⌉, ω(G)}`
//! colors from the interval model, spreading weight so the lightest color
//! stays as heavy as possible: clique members seed one bin each, intervals
//! left of the clique anchor go to the bin minimizing current weight plus
//! the estimated weight of the empty horizon to its right, intervals right
//! of the anchor go to the lightest bin. If every bin is within capacity the
//! coloring is optimal and the solve ends.
//!
//! Phase II repeatedly picks a heaviest bin and repairs it: first by
//! exchanging bin tails (the members at or right of a sweeping coordinate)
//! with a lighter bin, then by relocating single items, opening at most one
//! new bin per repair pass.

use crate::bounds::{lb_bin_packing, lb_bppc};
use crate::clique::leftmost_max_clique;
use crate::error::Error;
use crate::instance::Instance;
use crate::interval::{intersects, Interval, IntervalModel};
use crate::packing::{verify_packing, Packing, SolveReport};
use std::time::Instant;

/// Initial color count and BPPC lower bound: `max{⌈Σw/B⌉, ω(G)}`.
pub fn lambda_bound(instance: &Instance) -> Result<u64, Error> {
    let model = instance.model().ok_or(Error::MissingModel)?;
    let packing_bound = lb_bin_packing(instance.weights(), instance.capacity())?;
    if instance.is_empty() {
        return Ok(0);
    }
    Ok(packing_bound.max(leftmost_max_clique(model).omega as u64))
}

/// Working state of the heuristic: a (possibly capacity-infeasible) family
/// of independent sets covering all items.
#[derive(Debug, Clone)]
pub struct BnState<'a> {
    instance: &'a Instance,
    model: &'a IntervalModel,
    /// Initial color count; bins may be added during repair.
    pub lambda: usize,
    /// Average weight of a unit segment, `Σw / (R λ)`.
    pub mu: f64,
    /// Per-initial-bin anchor `R_i`: the right endpoint of the bin's clique
    /// member, or the clique coordinate `π` for the extra bins.
    pub r_anchor: Vec<u32>,
    /// Per-initial-bin estimated weight `μ (R - R_i)`, fixed after seeding.
    pub w_est: Vec<f64>,
    bins: Vec<Vec<usize>>,
    bin_weights: Vec<u64>,
    bin_of: Vec<usize>,
    /// Per bin: running maximum of `r` over the (l, id)-sorted members.
    prefix_max_r: Vec<Vec<u32>>,
    /// Per bin: weight of the member suffix starting at each index.
    suffix_weight: Vec<Vec<u64>>,
    /// `Σw · (R - R_i)`: integer numerators of the weight estimates, so bin
    /// scores compare exactly.
    est_num: Vec<u64>,
    /// `R · λ`, the common denominator scale for bin scores.
    scale: u64,
}

/// The members of a bin at or right of a coordinate `rho`. Defined only when
/// no member straddles `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailView {
    pub bin: usize,
    pub rho: u32,
    pub defined: bool,
    pub members: Vec<usize>,
    pub weight: u64,
}

/// Counters describing one solve; the invariant suite asserts over them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BnStats {
    /// Repair-loop iterations performed.
    pub iterations: u64,
    /// Iterations that failed to shrink the pair (heavy bins, total excess)
    /// lexicographically.
    pub lex_violations: u64,
}

impl<'a> BnState<'a> {
    pub fn num_bins(&self) -> usize {
        self.bins.len()
    }

    pub fn bins(&self) -> &[Vec<usize>] {
        &self.bins
    }

    pub fn bin_weights(&self) -> &[u64] {
        &self.bin_weights
    }

    fn interval(&self, item: usize) -> &Interval {
        self.model.interval(item)
    }

    fn capacity(&self) -> u64 {
        self.instance.capacity() as u64
    }

    fn item_weight(&self, item: usize) -> u64 {
        self.instance.weight(item) as u64
    }

    fn bin_conflicts(&self, bin: usize, item: usize) -> bool {
        let iv = self.interval(item);
        self.bins[bin]
            .iter()
            .any(|&m| intersects(self.interval(m), iv))
    }

    fn rebuild_aux(&mut self, bin: usize) {
        let members = &self.bins[bin];
        let mut running = 0u32;
        let prefix = members
            .iter()
            .map(|&m| {
                running = running.max(self.model.interval(m).r);
                running
            })
            .collect();
        let mut suffix = vec![0u64; members.len() + 1];
        for k in (0..members.len()).rev() {
            suffix[k] = suffix[k + 1] + self.instance.weight(members[k]) as u64;
        }
        self.prefix_max_r[bin] = prefix;
        self.suffix_weight[bin] = suffix;
    }

    /// Split index and tail weight at `rho`, or `None` when a member
    /// straddles the coordinate. Members are kept sorted by `(l, id)`, so
    /// the tail is a suffix.
    fn tail_split(&self, bin: usize, rho: u32) -> Option<(usize, u64)> {
        let members = &self.bins[bin];
        let split = members.partition_point(|&m| self.model.interval(m).l < rho);
        if split > 0 && self.prefix_max_r[bin][split - 1] > rho {
            return None;
        }
        Some((split, self.suffix_weight[bin][split]))
    }

    /// The tail of `bin` at coordinate `rho`.
    pub fn tail(&self, bin: usize, rho: u32) -> TailView {
        match self.tail_split(bin, rho) {
            Some((split, weight)) => TailView {
                bin,
                rho,
                defined: true,
                members: self.bins[bin][split..].to_vec(),
                weight,
            },
            None => TailView {
                bin,
                rho,
                defined: false,
                members: Vec::new(),
                weight: 0,
            },
        }
    }

    fn sort_key(&self, item: usize) -> (u32, usize) {
        (self.model.interval(item).l, item)
    }

    fn insert_member(&mut self, bin: usize, item: usize) {
        let key = self.sort_key(item);
        let pos = self.bins[bin].partition_point(|&m| self.sort_key(m) < key);
        self.bins[bin].insert(pos, item);
        self.bin_weights[bin] += self.item_weight(item);
        self.bin_of[item] = bin;
        self.rebuild_aux(bin);
    }

    fn remove_member(&mut self, bin: usize, item: usize) {
        let key = self.sort_key(item);
        let pos = self.bins[bin].partition_point(|&m| self.sort_key(m) < key);
        debug_assert_eq!(self.bins[bin][pos], item);
        self.bins[bin].remove(pos);
        self.bin_weights[bin] -= self.item_weight(item);
        self.rebuild_aux(bin);
    }

    /// Exchanges the tails of `g` and `h` at the given split positions.
    fn swap_tails(&mut self, g: usize, split_g: usize, h: usize, split_h: usize) {
        let tail_g: Vec<usize> = self.bins[g].split_off(split_g);
        let tail_h: Vec<usize> = self.bins[h].split_off(split_h);
        let w_tail_g: u64 = tail_g.iter().map(|&m| self.item_weight(m)).sum();
        let w_tail_h: u64 = tail_h.iter().map(|&m| self.item_weight(m)).sum();
        for &m in &tail_h {
            self.bin_of[m] = g;
        }
        for &m in &tail_g {
            self.bin_of[m] = h;
        }
        // Prefix members end at or before rho and tail members start at or
        // after it, so concatenation preserves the (l, id) order.
        self.bins[g].extend(tail_h);
        self.bins[h].extend(tail_g);
        self.bin_weights[g] = self.bin_weights[g] + w_tail_h - w_tail_g;
        self.bin_weights[h] = self.bin_weights[h] + w_tail_g - w_tail_h;
        self.rebuild_aux(g);
        self.rebuild_aux(h);
        debug_assert!(self.bin_is_independent(g) && self.bin_is_independent(h));
        debug_assert!(self.weight_caches_ok(&[g, h]));
    }

    /// One pass of tail exchanges for the heavy bin `g`: sweep `rho` from
    /// the smallest right endpoint in `g` to the horizon, and at each
    /// coordinate swap tails with the light bin whose tail is lightest among
    /// those that shrink `g` and keep the partner light.
    pub fn tail_exchange_step(&mut self, g: usize) {
        let cap = self.capacity();
        let horizon = self.model.horizon();
        debug_assert!(self.bin_weights[g] > cap);
        let mut rho = match self.bins[g].iter().map(|&m| self.interval(m).r).min() {
            Some(r) => r,
            None => return,
        };
        while self.bin_weights[g] > cap && rho < horizon {
            if let Some((split_g, w_tail_g)) = self.tail_split(g, rho) {
                if w_tail_g > 0 {
                    let mut best: Option<(u64, usize, usize)> = None;
                    for h in 0..self.bins.len() {
                        if h == g || self.bin_weights[h] > cap {
                            continue;
                        }
                        if let Some((split_h, w_tail_h)) = self.tail_split(h, rho) {
                            if w_tail_h < w_tail_g
                                && self.bin_weights[h] - w_tail_h + w_tail_g <= cap
                                && best.map_or(true, |(w, _, _)| w_tail_h < w)
                            {
                                best = Some((w_tail_h, h, split_h));
                            }
                        }
                    }
                    if let Some((_, h, split_h)) = best {
                        self.swap_tails(g, split_g, h, split_h);
                    }
                }
            }
            rho += 1;
        }
    }

    /// Relocates single items out of the heavy bin `g` until it is light.
    ///
    /// Each round picks the member whose weight is closest to the current
    /// excess and tries, in order: the fullest bin that still fits it; the
    /// lightest bin that is already heavy; a new bin, opened at most once
    /// per pass and reused for every later fallback in the same pass.
    ///
    /// Because light bins only ever receive items they can absorb, each
    /// repair pass either lowers the heavy-bin count or (when the new bin
    /// ends up heavy) lowers the total excess, which bounds the repair loop.
    pub fn insertion_step(&mut self, g: usize) {
        let cap = self.capacity();
        let mut new_bin: Option<usize> = None;
        while self.bin_weights[g] > cap {
            let excess = (self.bin_weights[g] - cap) as i64;
            let mut pick: Option<(i64, u64, usize)> = None;
            for &j in &self.bins[g] {
                let w = self.item_weight(j);
                let diff = (excess - w as i64).abs();
                let better = match pick {
                    None => true,
                    Some((bd, bw, bj)) => {
                        diff < bd || (diff == bd && (w > bw || (w == bw && j < bj)))
                    }
                };
                if better {
                    pick = Some((diff, w, j));
                }
            }
            let (_, w, item) = pick.expect("a heavy bin cannot be empty");

            // (a) A bin that still fits the item, preferring the fullest.
            let mut target: Option<usize> = None;
            for h in 0..self.bins.len() {
                if h != g
                    && self.bin_weights[h] + w <= cap
                    && !self.bin_conflicts(h, item)
                    && target.map_or(true, |t| self.bin_weights[h] > self.bin_weights[t])
                {
                    target = Some(h);
                }
            }
            // (b) Otherwise, the lightest among the bins that are already
            // heavy. Strictly heavy: letting bins at exactly capacity absorb
            // items makes them heavy and the repair loop can ping-pong the
            // same item between two such bins forever.
            if target.is_none() {
                for h in 0..self.bins.len() {
                    if h != g
                        && self.bin_weights[h] > cap
                        && !self.bin_conflicts(h, item)
                        && target.map_or(true, |t| self.bin_weights[h] < self.bin_weights[t])
                    {
                        target = Some(h);
                    }
                }
            }
            // (c) Otherwise, the pass's new bin. Members moved here all come
            // from the same original independent set, so no conflict arises.
            let target = target.unwrap_or_else(|| {
                *new_bin.get_or_insert_with(|| {
                    self.bins.push(Vec::new());
                    self.bin_weights.push(0);
                    self.prefix_max_r.push(Vec::new());
                    self.suffix_weight.push(vec![0]);
                    self.bins.len() - 1
                })
            });
            debug_assert!(!self.bin_conflicts(target, item));
            self.remove_member(g, item);
            self.insert_member(target, item);
            debug_assert!(self.weight_caches_ok(&[g, target]));
        }
    }

    /// (heavy bin count, total excess weight): the repair loop's progress
    /// measure.
    fn progress(&self) -> (u64, u64) {
        let cap = self.capacity();
        let mut heavy = 0u64;
        let mut excess = 0u64;
        for &w in &self.bin_weights {
            if w > cap {
                heavy += 1;
                excess += w - cap;
            }
        }
        (heavy, excess)
    }

    fn heaviest_bin(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (b, &w) in self.bin_weights.iter().enumerate() {
            if best.map_or(true, |c| w > self.bin_weights[c]) {
                best = Some(b);
            }
        }
        best
    }

    fn bin_is_independent(&self, bin: usize) -> bool {
        let members = &self.bins[bin];
        members.iter().enumerate().all(|(k, &u)| {
            members[k + 1..]
                .iter()
                .all(|&v| !intersects(self.interval(u), self.interval(v)))
        })
    }

    fn weight_caches_ok(&self, bins: &[usize]) -> bool {
        bins.iter().all(|&b| {
            let fresh: u64 = self.bins[b].iter().map(|&m| self.item_weight(m)).sum();
            fresh == self.bin_weights[b]
        })
    }

    fn is_partition(&self) -> bool {
        let mut seen = vec![false; self.instance.len()];
        for (b, bin) in self.bins.iter().enumerate() {
            for &m in bin {
                if seen[m] || self.bin_of[m] != b {
                    return false;
                }
                seen[m] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn into_packing(self) -> Packing {
        debug_assert!(self.bins.iter().all(|b| !b.is_empty()));
        Packing::new(self.bins, self.instance)
    }
}

/// Builds the initial `λ`-coloring.
///
/// Clique members (ascending id) each seed one bin; remaining intervals left
/// of the clique coordinate `π` are placed in decreasing right-endpoint
/// order into the non-conflicting bin minimizing `W + W_est`, and intervals
/// right of `π` in increasing left-endpoint order into the non-conflicting
/// bin of minimum weight. An eligible bin always exists: the intervals
/// conflicting with the one being placed pairwise overlap, so they occupy
/// fewer than `λ` bins.
pub fn phase1(instance: &Instance) -> Result<BnState<'_>, Error> {
    let model = instance.model().ok_or(Error::MissingModel)?;
    if instance.capacity() == 0 {
        return Err(Error::ZeroCapacity);
    }
    let n = instance.len();
    assert!(n > 0, "phase 1 needs at least one item");

    let info = leftmost_max_clique(model);
    let lambda = lambda_bound(instance)? as usize;
    let horizon = model.horizon();
    let total = instance.total_weight();
    let scale = horizon as u64 * lambda as u64;
    let mu = total as f64 / scale as f64;

    let mut r_anchor = vec![info.pi; lambda];
    for (bin, &member) in info.clique.iter().enumerate() {
        r_anchor[bin] = model.interval(member).r;
    }
    let est_num: Vec<u64> = r_anchor
        .iter()
        .map(|&r| total * (horizon - r) as u64)
        .collect();
    let w_est: Vec<f64> = r_anchor.iter().map(|&r| mu * (horizon - r) as f64).collect();

    let mut state = BnState {
        instance,
        model,
        lambda,
        mu,
        r_anchor,
        w_est,
        bins: vec![Vec::new(); lambda],
        bin_weights: vec![0; lambda],
        bin_of: vec![usize::MAX; n],
        prefix_max_r: vec![Vec::new(); lambda],
        suffix_weight: vec![vec![0]; lambda],
        est_num,
        scale,
    };

    let mut in_clique = vec![false; n];
    for (bin, &member) in info.clique.iter().enumerate() {
        in_clique[member] = true;
        state.bins[bin].push(member);
        state.bin_weights[bin] = state.item_weight(member);
        state.bin_of[member] = bin;
    }

    let mut left: Vec<usize> = Vec::new();
    let mut right: Vec<usize> = Vec::new();
    for item in 0..n {
        if in_clique[item] {
            continue;
        }
        let iv = model.interval(item);
        if iv.r <= info.pi {
            left.push(item);
        } else {
            debug_assert!(
                iv.l >= info.pi,
                "interval {item} straddles pi and is outside the maximum clique"
            );
            right.push(item);
        }
    }
    left.sort_unstable_by_key(|&i| (std::cmp::Reverse(model.interval(i).r), i));
    right.sort_unstable_by_key(|&i| (model.interval(i).l, i));

    // Conflict checks run against unsorted member lists here; sortedness and
    // the aux arrays are established once after all placements.
    for item in left {
        let iv = model.interval(item);
        let mut best: Option<usize> = None;
        for bin in 0..lambda {
            let free = !state.bins[bin]
                .iter()
                .any(|&m| intersects(model.interval(m), iv));
            if free {
                let score = state.bin_weights[bin] * state.scale + state.est_num[bin];
                let better = best.map_or(true, |b| {
                    score < state.bin_weights[b] * state.scale + state.est_num[b]
                });
                if better {
                    best = Some(bin);
                }
            }
        }
        let bin = best.expect("a lambda-coloring always has a free bin");
        state.bins[bin].push(item);
        state.bin_weights[bin] += state.item_weight(item);
        state.bin_of[item] = bin;
    }

    for item in right {
        let iv = model.interval(item);
        let mut best: Option<usize> = None;
        for bin in 0..lambda {
            let free = !state.bins[bin]
                .iter()
                .any(|&m| intersects(model.interval(m), iv));
            if free && best.map_or(true, |b| state.bin_weights[bin] < state.bin_weights[b]) {
                best = Some(bin);
            }
        }
        let bin = best.expect("a lambda-coloring always has a free bin");
        state.bins[bin].push(item);
        state.bin_weights[bin] += state.item_weight(item);
        state.bin_of[item] = bin;
    }

    for bin in 0..lambda {
        let keys: Vec<(u32, usize)> = {
            let mut ks: Vec<(u32, usize)> = state.bins[bin]
                .iter()
                .map(|&m| (model.interval(m).l, m))
                .collect();
            ks.sort_unstable();
            ks
        };
        state.bins[bin] = keys.into_iter().map(|(_, m)| m).collect();
        state.rebuild_aux(bin);
    }
    debug_assert!(state.is_partition());
    debug_assert!((0..lambda).all(|b| state.bin_is_independent(b)));
    Ok(state)
}

/// Runs the full heuristic and reports the outcome.
pub fn solve(instance: &Instance) -> Result<(Packing, SolveReport), Error> {
    let (packing, report, _) = solve_with_stats(instance)?;
    Ok((packing, report))
}

/// As [`solve`], additionally returning repair-loop counters.
pub fn solve_with_stats(
    instance: &Instance,
) -> Result<(Packing, SolveReport, BnStats), Error> {
    let started = Instant::now();
    let mut stats = BnStats::default();
    if instance.is_empty() {
        let packing = Packing::new(Vec::new(), instance);
        let report = SolveReport {
            algorithm: "bn",
            value: 0,
            lower_bound: 0,
            certified_optimal: true,
            elapsed: started.elapsed(),
            feasible: true,
        };
        return Ok((packing, report, stats));
    }

    let mut state = phase1(instance)?;
    let cap = instance.capacity() as u64;
    let n = instance.len();
    let guard = n * (state.lambda + n);

    loop {
        let g = state.heaviest_bin().expect("at least one bin exists");
        if state.bin_weights[g] <= cap {
            break;
        }
        stats.iterations += 1;
        if stats.iterations > guard as u64 {
            return Err(Error::IterationGuard { guard });
        }
        let before = state.progress();
        state.tail_exchange_step(g);
        if state.bin_weights[g] > cap {
            state.insertion_step(g);
        }
        let after = state.progress();
        if after >= before {
            stats.lex_violations += 1;
        }
        debug_assert!(state.is_partition());
    }

    let lower_bound = lb_bppc(instance)?;
    let packing = state.into_packing();
    let feasible = verify_packing(instance, &packing).is_feasible();
    debug_assert!(feasible, "repair loop ended on an infeasible packing");
    let value = packing.num_bins() as u64;
    let report = SolveReport {
        algorithm: "bn",
        value,
        lower_bound,
        certified_optimal: value == lower_bound,
        elapsed: started.elapsed(),
        feasible,
    };
    Ok((packing, report, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_disjoint_model, sample_weights};
    use crate::interval::IntervalModel;
    use crate::packing::Feasibility;

    fn edgeless(weights: Vec<u32>, capacity: u32) -> Instance {
        let n = weights.len();
        Instance::from_model(weights, capacity, generate_disjoint_model(n)).unwrap()
    }

    #[test]
    fn lambda_bound_examples() {
        let inst = edgeless(vec![60, 60, 60], 100);
        assert_eq!(lambda_bound(&inst).unwrap(), 2);

        let k4 = IntervalModel::new(vec![(0, 10); 4]);
        let inst = Instance::from_model(vec![1, 1, 1, 1], 1000, k4).unwrap();
        assert_eq!(lambda_bound(&inst).unwrap(), 4);

        let model = IntervalModel::new(vec![(0, 4), (1, 5), (2, 3), (6, 8)]);
        let inst = Instance::from_model(vec![100; 4], 150, model).unwrap();
        assert_eq!(lambda_bound(&inst).unwrap(), 3); // max(ceil(400/150), 3)
    }

    #[test]
    fn phase1_gives_singletons_on_a_clique() {
        let k3 = IntervalModel::new(vec![(0, 10); 3]);
        let inst = Instance::from_model(vec![5, 5, 5], 100, k3).unwrap();
        let state = phase1(&inst).unwrap();
        assert_eq!(state.lambda, 3);
        assert_eq!(state.bins(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn phase1_balances_an_edgeless_instance() {
        // Hand trace: clique = {0}; items 1..4 go to the lighter bin, ties
        // to the lower index. 0:60 -> bin0; 1:50 -> bin1; 2:40 -> bin1(90);
        // 3:30 -> bin0(90); 4:20 -> tie -> bin0(110).
        let inst = edgeless(vec![60, 50, 40, 30, 20], 100);
        let state = phase1(&inst).unwrap();
        assert_eq!(state.lambda, 2);
        assert_eq!(state.bins(), &[vec![0, 3, 4], vec![1, 2]]);
        assert_eq!(state.bin_weights(), &[110, 90]);
    }

    #[test]
    fn phase1_output_is_a_proper_coloring() {
        use crate::generate::{generate_interval_model, IntervalGenSpec};
        let model = generate_interval_model(&IntervalGenSpec::new(80, 0.4, 21));
        let weights = sample_weights(80, 20, 100, 22);
        let inst = Instance::from_model(weights, 150, model).unwrap();
        let state = phase1(&inst).unwrap();
        assert_eq!(state.num_bins(), state.lambda);
        for b in 0..state.num_bins() {
            assert!(state.bin_is_independent(b));
        }
        let placed: usize = state.bins().iter().map(|b| b.len()).sum();
        assert_eq!(placed, 80);
    }

    #[test]
    fn tail_views_follow_the_straddle_rule() {
        // Bin 0 = {(0,2), (3,5)}, bin 1 = {(0,4)}.
        let model = IntervalModel::new(vec![(0, 2), (3, 5), (0, 4), (6, 7), (6, 7)]);
        let inst = Instance::from_model(vec![10, 20, 30, 1, 1], 100, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        // Rearrange into known bins for the view test.
        state.bins = vec![vec![0, 1], vec![2], vec![3], vec![4]];
        state.bin_weights = vec![30, 30, 1, 1];
        for m in [0usize, 1] {
            state.bin_of[m] = 0;
        }
        state.bin_of[2] = 1;
        state.bin_of[3] = 2;
        state.bin_of[4] = 3;
        state.prefix_max_r = vec![Vec::new(); 4];
        state.suffix_weight = vec![vec![0]; 4];
        for b in 0..4 {
            state.rebuild_aux(b);
        }

        let t = state.tail(0, 2);
        assert!(t.defined);
        assert_eq!(t.members, vec![1]);
        assert_eq!(t.weight, 20);

        let t = state.tail(1, 2); // (0,4) straddles 2
        assert!(!t.defined);

        let t = state.tail(0, 0);
        assert!(t.defined);
        assert_eq!(t.members, vec![0, 1]);
        assert_eq!(t.weight, 30);
    }

    #[test]
    fn tail_exchange_hand_trace() {
        // g = {(0,1) w=100, (2,3) w=100}, h = {(2,3)' w=10}, B = 150.
        // The first admissible coordinate already swaps the (2,3) tails:
        // g ends at weight 110, h at 100.
        let model = IntervalModel::new(vec![(0, 1), (2, 3), (2, 3)]);
        let inst = Instance::from_model(vec![100, 100, 10], 150, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1], vec![2]];
        state.bin_weights = vec![200, 10];
        state.bin_of = vec![0, 0, 1];
        state.prefix_max_r = vec![Vec::new(); 2];
        state.suffix_weight = vec![vec![0]; 2];
        for b in 0..2 {
            state.rebuild_aux(b);
        }

        state.tail_exchange_step(0);
        assert_eq!(state.bins(), &[vec![0, 2], vec![1]]);
        assert_eq!(state.bin_weights(), &[110, 100]);
    }

    #[test]
    fn tail_exchange_without_light_partners_changes_nothing() {
        let model = IntervalModel::new(vec![(0, 1), (2, 3), (0, 3), (4, 5)]);
        let inst = Instance::from_model(vec![100, 100, 80, 80], 150, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1], vec![2, 3]];
        state.bin_weights = vec![200, 160];
        state.bin_of = vec![0, 0, 1, 1];
        state.prefix_max_r = vec![Vec::new(); 2];
        state.suffix_weight = vec![vec![0]; 2];
        for b in 0..2 {
            state.rebuild_aux(b);
        }
        // The only other bin is heavy, so no exchange is admissible.
        let before = state.bins().to_vec();
        state.tail_exchange_step(0);
        assert_eq!(state.bins(), &before[..]);
        assert_eq!(state.bin_weights(), &[200, 160]);
    }

    #[test]
    fn tail_exchange_skips_straddled_partners() {
        // Bin 1 is light but its member (0,3) straddles every coordinate at
        // which g's tail is nonempty, so nothing moves.
        let model = IntervalModel::new(vec![(0, 1), (2, 3), (0, 3)]);
        let inst = Instance::from_model(vec![100, 100, 140], 150, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1], vec![2]];
        state.bin_weights = vec![200, 140];
        state.bin_of = vec![0, 0, 1];
        state.prefix_max_r = vec![Vec::new(); 2];
        state.suffix_weight = vec![vec![0]; 2];
        for b in 0..2 {
            state.rebuild_aux(b);
        }
        let before = state.bins().to_vec();
        state.tail_exchange_step(0);
        assert_eq!(state.bins(), &before[..]);
    }

    #[test]
    fn insertion_moves_the_best_fitting_item() {
        // W(g) = 160, B = 150; the w=10 item exactly cancels the excess and
        // the fullest fitting bin (140) takes it.
        let model =
            IntervalModel::new(vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (7, 8)]);
        let inst =
            Instance::from_model(vec![100, 50, 10, 140, 100, 30, 10], 150, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1, 2], vec![3], vec![4, 5, 6]];
        state.bin_weights = vec![160, 140, 140];
        state.bin_of = vec![0, 0, 0, 1, 2, 2, 2];
        state.prefix_max_r = vec![Vec::new(); 3];
        state.suffix_weight = vec![vec![0]; 3];
        for b in 0..3 {
            state.rebuild_aux(b);
        }

        state.insertion_step(0);
        assert_eq!(state.bin_weights(), &[150, 150, 140]);
        assert_eq!(state.bins()[1], vec![2, 3]);
    }

    #[test]
    fn insertion_selection_prefers_weight_closest_to_excess() {
        // W(g) = 135, B = 85, member weights {60, 45, 30}: the excess is 50
        // and |50-45| = 5 wins, so item 1 leaves first.
        let model = IntervalModel::new(vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
        let inst = Instance::from_model(vec![60, 45, 30, 65], 85, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1, 2], vec![3]];
        state.bin_weights = vec![135, 65];
        state.bin_of = vec![0, 0, 0, 1];
        state.prefix_max_r = vec![Vec::new(); 2];
        state.suffix_weight = vec![vec![0]; 2];
        for b in 0..2 {
            state.rebuild_aux(b);
        }
        // Item 1 conflicts with bin 1 and would overflow it anyway, so a new
        // bin opens; the follow-up move (item 2, diff 25) joins it there.
        state.insertion_step(0);
        assert_eq!(state.bins()[0], vec![0]);
        assert_eq!(state.bins()[2], vec![1, 2]);
        assert!(state.bin_weights()[0] <= 85);
    }

    #[test]
    fn excess_streams_into_a_single_new_bin() {
        // Every existing bin conflicts with g's members: case (c) reuses one
        // new bin for the whole pass.
        let model = IntervalModel::new(vec![(0, 1), (1, 2), (2, 3), (0, 4)]);
        let inst = Instance::from_model(vec![50, 50, 50, 50], 60, model).unwrap();
        let mut state = phase1(&inst).unwrap();
        state.bins = vec![vec![0, 1, 2], vec![3]];
        state.bin_weights = vec![150, 50];
        state.bin_of = vec![0, 0, 0, 1];
        state.prefix_max_r = vec![Vec::new(); 2];
        state.suffix_weight = vec![vec![0]; 2];
        for b in 0..2 {
            state.rebuild_aux(b);
        }
        state.insertion_step(0);
        assert_eq!(state.num_bins(), 3);
        assert_eq!(state.bins()[2].len(), 2);
        assert!(state.bin_weights()[0] <= 60);
    }

    #[test]
    fn solve_reduces_to_coloring_when_capacity_is_loose() {
        let model = IntervalModel::new(vec![(0, 4), (1, 5), (2, 3), (6, 8)]);
        let inst = Instance::from_model(vec![10, 20, 30, 40], 1000, model).unwrap();
        let (packing, report) = solve(&inst).unwrap();
        assert_eq!(report.value, 3); // chi = omega = 3
        assert!(report.certified_optimal);
        assert_eq!(verify_packing(&inst, &packing), Feasibility::Feasible);
    }

    #[test]
    fn solve_balances_the_edgeless_hand_trace() {
        // Phase I leaves bins {0,3,4} = 110 / {1,2} = 90; one tail exchange
        // at rho = 2 swaps {2} for {3,4} and both bins land exactly at 100.
        let inst = edgeless(vec![60, 50, 40, 30, 20], 100);
        let (packing, report) = solve(&inst).unwrap();
        assert_eq!(report.value, 2);
        assert!(report.certified_optimal);
        assert_eq!(packing.bins(), &[vec![0, 2], vec![1, 3, 4]]);
        assert_eq!(packing.bin_weights(), &[100, 100]);
    }

    #[test]
    fn solve_is_deterministic() {
        use crate::generate::{generate_interval_model, IntervalGenSpec};
        let model = generate_interval_model(&IntervalGenSpec::new(60, 0.3, 5));
        let weights = sample_weights(60, 20, 100, 6);
        let inst = Instance::from_model(weights, 150, model).unwrap();
        let (p1, r1) = solve(&inst).unwrap();
        let (p2, r2) = solve(&inst).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(r1.value, r2.value);
    }

    #[test]
    fn repair_makes_lexicographic_progress_on_small_instances() {
        use crate::generate::{generate_interval_model, IntervalGenSpec};
        for seed in 0..20 {
            let model = generate_interval_model(&IntervalGenSpec::new(50, 0.4, seed));
            let weights = sample_weights(50, 20, 100, seed + 1000);
            let inst = Instance::from_model(weights, 120, model).unwrap();
            let (packing, report, stats) = solve_with_stats(&inst).unwrap();
            assert_eq!(verify_packing(&inst, &packing), Feasibility::Feasible);
            assert!(report.value >= report.lower_bound);
            assert_eq!(stats.lex_violations, 0, "seed {seed}");
        }
    }

    #[test]
    fn missing_model_is_rejected() {
        let g = crate::graph::ConflictGraph::from_edges(2, &[]);
        let inst = Instance::new(vec![1, 1], 10, g, None).unwrap();
        assert_eq!(solve(&inst).unwrap_err(), Error::MissingModel);
    }
}
