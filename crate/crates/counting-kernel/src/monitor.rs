use planar_core::VSet;

/// What a monitor is for; set by whoever creates it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonitorRole {
    /// The whole-graph monitor of a top-level subproblem.
    Total,
    /// A small monitor (cycle, separator or side selection).
    Small,
    /// A large monitor (interior/exterior mass).
    Large,
    /// Upper bound carried into a split child; never read back by a combiner.
    Cap,
}

/// Vertex set with an admissible range for the number of pattern vertices mapped into it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monitor {
    pub set: VSet,
    pub low: usize,
    pub upp: usize,
    pub role: MonitorRole,
}

impl Monitor {
    pub fn new(set: VSet, low: usize, upp: usize, role: MonitorRole) -> Self {
        Monitor { set, low, upp, role }
    }

    pub fn admits(&self, hits: usize) -> bool {
        (self.low..=self.upp).contains(&hits)
    }

    /// Size-based classes; they overlap for `k < |M| <= k^4`.
    pub fn is_small_by_size(&self, k: usize) -> bool {
        self.upp > 0 && self.set.len() <= k.pow(4)
    }

    pub fn is_large_by_size(&self, k: usize) -> bool {
        self.upp > 0 && self.set.len() > k
    }
}

/// Ordered list of monitors; answer-table vectors follow this order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonitorSet(pub Vec<Monitor>);

impl MonitorSet {
    pub fn new(monitors: Vec<Monitor>) -> Self {
        MonitorSet(monitors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Monitor> {
        self.0.iter()
    }

    pub fn push(&mut self, m: Monitor) {
        self.0.push(m);
    }

    pub fn admits(&self, r: &[u8]) -> bool {
        self.0.iter().zip(r).all(|(m, &x)| m.admits(x as usize))
    }

    /// Smallest upper bound among monitors whose set contains `s`; `k` when none does.
    pub fn upp_of(&self, s: &VSet, k: usize) -> usize {
        self.0.iter().filter(|m| s.is_subset(&m.set)).map(|m| m.upp).min().unwrap_or(k).min(k)
    }

    /// Largest lower bound among monitors whose set lies inside `s`.
    pub fn low_of(&self, s: &VSet) -> usize {
        self.0.iter().filter(|m| m.set.is_subset(s)).map(|m| m.low).max().unwrap_or(0)
    }

    pub fn count_role(&self, role: MonitorRole) -> usize {
        self.0.iter().filter(|m| m.role == role).count()
    }

    /// Vertices no pattern vertex may use: members of a monitor with upper bound 0.
    pub fn forbidden(&self, universe: usize) -> VSet {
        let mut out = VSet::empty(universe);
        for m in self.0.iter().filter(|m| m.upp == 0) {
            out.union_with(&m.set);
        }
        out
    }

    /// Monitors cut down to `verts` with the lower bounds dropped, plus a cap on `verts`.
    pub fn split_child(&self, parent_verts: &VSet, verts: &VSet, k: usize) -> MonitorSet {
        let mut out: Vec<Monitor> = self
            .0
            .iter()
            .map(|m| Monitor::new(m.set.intersection(verts), 0, m.upp.min(k), m.role))
            .collect();
        let mut cap = self.upp_of(parent_verts, k);
        let mut used = VSet::empty(verts.universe());
        let mut outside: Vec<&Monitor> =
            self.0.iter().filter(|m| m.low > 0 && m.set.is_disjoint(verts)).collect();
        outside.sort_by_key(|m| std::cmp::Reverse(m.low));
        for m in outside {
            if m.set.is_disjoint(&used) {
                used.union_with(&m.set);
                cap = cap.saturating_sub(m.low);
            }
        }
        out.push(Monitor::new(verts.clone(), 0, cap, MonitorRole::Cap));
        MonitorSet(out)
    }

    /// Every vector `r` with `r[i]` in the range of monitor `i`.
    pub fn feasible_vectors(&self) -> FeasibleVectors<'_> {
        let start = self.0.iter().map(|m| m.low as u8).collect::<Vec<_>>();
        let empty = self.0.iter().any(|m| m.low > m.upp);
        FeasibleVectors { set: self, next: (!empty).then_some(start) }
    }
}

/// Odometer over the product of monitor ranges.
pub struct FeasibleVectors<'a> {
    set: &'a MonitorSet,
    next: Option<Vec<u8>>,
}

impl Iterator for FeasibleVectors<'_> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for (i, m) in self.set.0.iter().enumerate() {
            if (succ[i] as usize) < m.upp {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(cur);
            }
            succ[i] = m.low as u8;
        }
        Some(cur)
    }
}
