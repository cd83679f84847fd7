use planar_core::Cycle;

use crate::SeparatorError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Down,
    Right,
    Up,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Left, Direction::Down, Direction::Right, Direction::Up];

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

/// Four consecutive nonempty arcs of a cycle: positions `[0,c1)`, `[c1,c2)`, `[c2,c3)`, `[c3,len)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alignment {
    cycle: Cycle,
    cuts: [usize; 3],
}

impl Alignment {
    pub fn new(cycle: Cycle, cuts: [usize; 3]) -> Result<Self, SeparatorError> {
        let [c1, c2, c3] = cuts;
        if !(0 < c1 && c1 < c2 && c2 < c3 && c3 < cycle.len()) {
            return Err(SeparatorError::BadAlignment(format!("cuts {cuts:?} on a cycle of length {}", cycle.len())));
        }
        Ok(Alignment { cycle, cuts })
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn cuts(&self) -> [usize; 3] {
        self.cuts
    }

    fn bounds(&self) -> [usize; 5] {
        let [c1, c2, c3] = self.cuts;
        [0, c1, c2, c3, self.cycle.len()]
    }

    pub fn arc(&self, d: Direction) -> &[usize] {
        let b = self.bounds();
        &self.cycle.vertices()[b[d.index()]..b[d.index() + 1]]
    }

    pub fn arcs(&self) -> [&[usize]; 4] {
        Direction::ALL.map(|d| self.arc(d))
    }

    /// Last vertex of each of the first three arcs.
    pub fn arc_ends(&self) -> [usize; 3] {
        self.cuts.map(|c| self.cycle.vertices()[c - 1])
    }

    /// Number of marked vertices per arc.
    pub fn counts(&self, marked: impl Fn(usize) -> bool) -> [usize; 4] {
        self.arcs().map(|arc| arc.iter().filter(|&&v| marked(v)).count())
    }

    /// The three first arcs each hold exactly `quota` marked vertices and end on one, and
    /// the last arc holds more than `quota`. At most one alignment of a cycle matches a set.
    pub fn matches(&self, marked: impl Fn(usize) -> bool, quota: usize) -> bool {
        let counts = self.counts(&marked);
        counts[..3].iter().all(|&c| c == quota) && counts[3] > quota && self.arc_ends().iter().all(|&v| marked(v))
    }
}

/// Alignment whose arcs each hold at least `⌊h/4⌋` of the `h` marked cycle vertices: cut
/// after the `⌊h/4⌋`-th, `2⌊h/4⌋`-th and `3⌊h/4⌋`-th marked vertex.
pub fn align(c: &Cycle, marked: impl Fn(usize) -> bool) -> Result<Alignment, SeparatorError> {
    let positions: Vec<usize> = (0..c.len()).filter(|&i| marked(c.vertices()[i])).collect();
    if positions.len() < 4 {
        return Err(SeparatorError::QuotaTooSmall { found: positions.len(), need: 4 });
    }
    let q = positions.len() / 4;
    Alignment::new(c.clone(), [1, 2, 3].map(|j| positions[j * q - 1] + 1))
}

/// Every alignment of `c` (start fixed at position 0), in lexicographic order of cuts.
pub fn enumerate_alignments(c: &Cycle) -> impl Iterator<Item = Alignment> + '_ {
    let len = c.len();
    (1..len).flat_map(move |c1| {
        (c1 + 1..len).flat_map(move |c2| {
            (c2 + 1..len).map(move |c3| Alignment { cycle: c.clone(), cuts: [c1, c2, c3] })
        })
    })
}

/// Alignments that can arise as the `θ/4`-quantile split of a set meeting the cycle in more
/// than `θ` vertices; use [`Alignment::matches`] with quota `θ/4` to select the one for a set.
pub fn enumerate_alignments_by_pattern_quantiles(
    c: &Cycle,
    theta: usize,
) -> Result<impl Iterator<Item = Alignment> + '_, SeparatorError> {
    if theta < 4 {
        return Err(SeparatorError::BadParameters(format!("threshold {theta} is below 4")));
    }
    let quota = theta / 4;
    Ok(enumerate_alignments(c).filter(move |a| {
        let [c1, c2, c3] = a.cuts;
        c1 >= quota && c2 - c1 >= quota && c3 - c2 >= quota && c.len() - c3 > quota
    }))
}
