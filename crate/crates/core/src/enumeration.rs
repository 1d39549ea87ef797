//! Exhaustive, lazily produced generation of every class member and every
//! path family at small chain sizes — the brute-force census the counting
//! formulas are verified against.
//!
//! Maps stream in canonical order: domain subsets by ascending bitmask,
//! image tuples lexicographically within a subset. Paths stream in
//! lexicographic step-string order with `D < H < V`. Both orders are
//! duplicate-free by construction. A size guard (default 12) refuses
//! accidental exponential blow-ups; callers can raise it explicitly.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::chainmap::{ChainMap, ClassId};
use crate::counting::BigCount;
use crate::lattice::{LatticePath, Step};

/// Largest chain size enumerated without an explicit override.
pub const DEFAULT_GUARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("chain size {n} exceeds the enumeration guard {guard}")]
    SizeGuardExceeded { n: usize, guard: usize },
}

/// Which statistic a census buckets by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatisticId {
    /// Domain cardinality.
    DomCard,
    /// Number of distinct image values.
    ImCard,
    /// `max(Im) + 1`, with bucket 0 reserved for the empty map.
    GBucket,
}

/// Filters for path enumeration; the default enumerates everything.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathFilter {
    /// Keep paths weakly below the diagonal `y = x`.
    pub subdiagonal: bool,
    /// Drop paths containing a diagonal step.
    pub no_diag: bool,
    /// Drop paths whose final step is horizontal.
    pub last_not_h: bool,
}

struct TupleState {
    doms: Vec<usize>,
    uppers: Vec<usize>,
    image: Vec<usize>,
}

impl TupleState {
    /// Lexicographic successor of the nondecreasing image tuple under the
    /// per-position upper bounds. The bounds are nondecreasing for every
    /// class here, so resetting suffixes to the incremented value always
    /// stays feasible.
    fn advance(&mut self) -> bool {
        let r = self.image.len();
        for i in (0..r).rev() {
            if self.image[i] < self.uppers[i] {
                self.image[i] += 1;
                let v = self.image[i];
                for j in i + 1..r {
                    self.image[j] = v;
                }
                return true;
            }
        }
        false
    }
}

/// Lazy stream over one class at one chain size.
pub struct ClassIter {
    dom_size: usize,
    cod_size: usize,
    decreasing: bool,
    /// `Some(true)`: the bottom point must be in the domain; `Some(false)`:
    /// it must not be.
    bottom: Option<bool>,
    full_only: bool,
    next_mask: usize,
    state: Option<TupleState>,
}

impl ClassIter {
    fn new(class: ClassId, n: usize) -> Self {
        let (cod_size, decreasing, bottom, full_only) = match class {
            ClassId::Pc => (n, true, None, false),
            ClassId::C => (n, true, None, true),
            ClassId::Po => (n, false, None, false),
            ClassId::O => (n, false, None, true),
            ClassId::Del => (n + 1, false, None, false),
            ClassId::Q => (n, true, Some(true), false),
            ClassId::Qp => (n, true, Some(false), false),
        };
        ClassIter {
            dom_size: n,
            cod_size,
            decreasing,
            bottom,
            full_only,
            next_mask: 0,
            state: None,
        }
    }

    fn admissible(&self, mask: usize) -> bool {
        if self.full_only && mask != (1usize << self.dom_size) - 1 {
            return false;
        }
        match self.bottom {
            Some(true) => mask & 1 == 1,
            Some(false) => mask & 1 == 0,
            None => true,
        }
    }

}

impl Iterator for ClassIter {
    type Item = ChainMap;

    fn next(&mut self) -> Option<ChainMap> {
        loop {
            if let Some(state) = self.state.as_mut() {
                let pairs: Vec<(usize, usize)> = state
                    .doms
                    .iter()
                    .copied()
                    .zip(state.image.iter().copied())
                    .collect();
                let item = ChainMap::new(self.dom_size, self.cod_size, pairs)
                    .expect("generated tuples satisfy the map invariants");
                if !state.advance() {
                    self.state = None;
                }
                return Some(item);
            }
            let limit = 1usize << self.dom_size;
            let mut mask = self.next_mask;
            while mask < limit && !self.admissible(mask) {
                mask += 1;
            }
            if mask >= limit {
                return None;
            }
            self.next_mask = mask + 1;
            let doms: Vec<usize> = (0..self.dom_size).filter(|i| mask >> i & 1 == 1).collect();
            let uppers: Vec<usize> = if self.decreasing {
                doms.clone()
            } else {
                vec![self.cod_size.saturating_sub(1); doms.len()]
            };
            let image = vec![0; doms.len()];
            self.state = Some(TupleState { doms, uppers, image });
        }
    }
}

/// Streams every member of `class` on the `n`-chain under the default guard.
pub fn enumerate_class(class: ClassId, n: usize) -> Result<ClassIter, EnumError> {
    enumerate_class_with_guard(class, n, DEFAULT_GUARD)
}

pub fn enumerate_class_with_guard(
    class: ClassId,
    n: usize,
    guard: usize,
) -> Result<ClassIter, EnumError> {
    if n > guard {
        return Err(EnumError::SizeGuardExceeded { n, guard });
    }
    Ok(ClassIter::new(class, n))
}

/// Lazy depth-first stream over paths in the `n × n` square, lexicographic
/// with `D < H < V`.
pub struct PathIter {
    side: usize,
    filter: PathFilter,
    stack: Vec<(Vec<Step>, usize, usize)>,
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        while let Some((steps, x, y)) = self.stack.pop() {
            if x == self.side && y == self.side {
                if self.filter.last_not_h && steps.last() == Some(&Step::H) {
                    continue;
                }
                return Some(
                    LatticePath::new(self.side, steps).expect("search stays inside the square"),
                );
            }
            // push in reverse so D pops first, then H, then V
            if y < self.side && (!self.filter.subdiagonal || y < x) {
                let mut next = steps.clone();
                next.push(Step::V);
                self.stack.push((next, x, y + 1));
            }
            if x < self.side {
                let mut next = steps.clone();
                next.push(Step::H);
                self.stack.push((next, x + 1, y));
            }
            if x < self.side && y < self.side && !self.filter.no_diag {
                let mut next = steps.clone();
                next.push(Step::D);
                self.stack.push((next, x + 1, y + 1));
            }
        }
        None
    }
}

/// Streams every path in the `n × n` square passing `filter`, under the
/// default guard.
pub fn enumerate_paths(n: usize, filter: PathFilter) -> Result<PathIter, EnumError> {
    enumerate_paths_with_guard(n, filter, DEFAULT_GUARD)
}

pub fn enumerate_paths_with_guard(
    n: usize,
    filter: PathFilter,
    guard: usize,
) -> Result<PathIter, EnumError> {
    if n > guard {
        return Err(EnumError::SizeGuardExceeded { n, guard });
    }
    Ok(PathIter {
        side: n,
        filter,
        stack: vec![(Vec::new(), 0, 0)],
    })
}

/// Exact histogram of one statistic over a class.
pub fn census(
    class: ClassId,
    n: usize,
    stat: StatisticId,
) -> Result<BTreeMap<usize, BigCount>, EnumError> {
    let mut hist: BTreeMap<usize, BigCount> = BTreeMap::new();
    for m in enumerate_class(class, n)? {
        let stats = m.stats();
        let key = match stat {
            StatisticId::DomCard => stats.dom_card,
            StatisticId::ImCard => stats.im_card,
            StatisticId::GBucket => stats.max_im.map_or(0, |top| top + 1),
        };
        *hist.entry(key).or_default() += 1usize;
    }
    Ok(hist)
}
