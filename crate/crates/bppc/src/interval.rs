/// An open interval `(l, r)` with integer endpoints, owned by item `id`.
///
/// Open semantics: two intervals that merely share an endpoint do not
/// intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    /// Item index, 0-based.
    pub id: usize,
    /// Left endpoint.
    pub l: u32,
    /// Right endpoint, strictly greater than `l`.
    pub r: u32,
}

impl Interval {
    pub fn new(id: usize, l: u32, r: u32) -> Self {
        assert!(l < r, "interval {id} has l={l} >= r={r}");
        Interval { id, l, r }
    }

    pub fn length(&self) -> u32 {
        self.r - self.l
    }
}

/// Returns true iff the two open intervals share a point: `l_p < r_q` and
/// `l_q < r_p`. A shared endpoint does not count.
pub fn intersects(p: &Interval, q: &Interval) -> bool {
    p.l < q.r && q.l < p.r
}

/// A family of open intervals, one per item, normalized so that the smallest
/// left endpoint is 0. `horizon` is the largest right endpoint after the
/// shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<Interval>,
    horizon: u32,
}

impl IntervalModel {
    /// Builds a model from `(l, r)` pairs in item order, shifting all
    /// endpoints left so that `min l = 0`.
    ///
    /// Panics if any pair has `l >= r`.
    pub fn new(endpoints: Vec<(u32, u32)>) -> Self {
        let shift = endpoints.iter().map(|&(l, _)| l).min().unwrap_or(0);
        let intervals = endpoints
            .into_iter()
            .enumerate()
            .map(|(id, (l, r))| Interval::new(id, l - shift, r - shift))
            .collect::<Vec<_>>();
        let horizon = intervals.iter().map(|iv| iv.r).max().unwrap_or(0);
        IntervalModel { intervals, horizon }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, id: usize) -> &Interval {
        &self.intervals[id]
    }

    /// Largest right endpoint (the paper-style horizon `R`).
    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    /// Number of intersecting pairs, without materializing the graph.
    ///
    /// Counts the complement: ordered pairs `(i, j)` with `r_i <= l_j` are
    /// exactly the non-edges (each unordered non-edge is counted once because
    /// the disjointness direction is unique for open intervals of positive
    /// length).
    pub fn edge_count(&self) -> u64 {
        let n = self.intervals.len() as u64;
        if n < 2 {
            return 0;
        }
        let mut rights: Vec<u32> = self.intervals.iter().map(|iv| iv.r).collect();
        rights.sort_unstable();
        let mut non_edges = 0u64;
        for iv in &self.intervals {
            non_edges += rights.partition_point(|&r| r <= iv.l) as u64;
        }
        n * (n - 1) / 2 - non_edges
    }
}
