//! Order-preserving partial transformations of a finite chain.
//!
//! A [`ChainMap`] is a partial map from the chain `{0, .., n-1}` into the
//! chain `{0, .., m-1}` with `m = n` or `m = n + 1`, stored in column form
//! `(a_1 .. a_r / b_1 .. b_r)`: the domain points `a_i` strictly increasing,
//! the image values `b_i` nondecreasing. Order preservation is a type
//! invariant — a value that violates it cannot be constructed. The `b`
//! sequence with multiplicity is the *simage*; its distinct values form the
//! image set.
//!
//! Composition is left to right, matching postfix application:
//! `x (fg) = (xf) g`. The [`ClassId`] predicates carve out the submonoids
//! the rest of the crate enumerates, counts and maps onto lattice paths.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from constructing or combining [`ChainMap`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainMapError {
    #[error("domain point {0} appears more than once")]
    DuplicateDomainPoint(usize),
    #[error("image values decrease at domain point {0}")]
    NonMonotoneImage(usize),
    #[error("point {point} lies outside the chain of size {size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("codomain size {cod_size} invalid for domain size {dom_size} (must be equal or one larger)")]
    BadCodomain { dom_size: usize, cod_size: usize },
    #[error("size mismatch: codomain of size {0} composed against domain of size {1}")]
    SizeMismatch(usize, usize),
    #[error("map does not belong to class {0}")]
    NotInClass(ClassId),
}

/// The transformation classes of interest. All consist of order-preserving
/// partial maps; the variants add decreasing / full / bottom-point /
/// extended-codomain restrictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// Decreasing order-preserving partial maps (codomain = domain chain).
    Pc,
    /// Decreasing order-preserving full maps.
    C,
    /// Order-preserving partial maps.
    Po,
    /// Order-preserving full maps.
    O,
    /// Order-preserving partial maps into the chain extended by one point.
    Del,
    /// Members of [`ClassId::Pc`] whose domain contains the bottom point 0.
    Q,
    /// Members of [`ClassId::Pc`] whose domain avoids the bottom point 0.
    Qp,
}

impl ClassId {
    pub const ALL: [ClassId; 7] = [
        ClassId::Pc,
        ClassId::C,
        ClassId::Po,
        ClassId::O,
        ClassId::Del,
        ClassId::Q,
        ClassId::Qp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Pc => "pc",
            ClassId::C => "c",
            ClassId::Po => "po",
            ClassId::O => "o",
            ClassId::Del => "del",
            ClassId::Q => "q",
            ClassId::Qp => "qp",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class name: {0}")]
pub struct UnknownClass(pub String);

impl FromStr for ClassId {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// Cardinality statistics of a map: `(|Dom|, |Im|, max Im)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapStats {
    pub dom_card: usize,
    pub im_card: usize,
    /// Largest image value; absent for the empty map.
    pub max_im: Option<usize>,
}

/// An order-preserving partial map of a finite chain, in column form.
///
/// Equality is structural: same sizes, same pair list. The pair list is
/// always sorted by domain point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainMap {
    dom_size: usize,
    cod_size: usize,
    pairs: Vec<(usize, usize)>,
}

fn validate(dom_size: usize, cod_size: usize, pairs: &[(usize, usize)]) -> Result<(), ChainMapError> {
    if cod_size != dom_size && cod_size != dom_size + 1 {
        return Err(ChainMapError::BadCodomain { dom_size, cod_size });
    }
    for window in pairs.windows(2) {
        let ((a0, b0), (a1, b1)) = (window[0], window[1]);
        if a0 == a1 {
            return Err(ChainMapError::DuplicateDomainPoint(a0));
        }
        if b1 < b0 {
            return Err(ChainMapError::NonMonotoneImage(a1));
        }
    }
    for &(a, b) in pairs {
        if a >= dom_size {
            return Err(ChainMapError::PointOutOfRange { point: a, size: dom_size });
        }
        if b >= cod_size {
            return Err(ChainMapError::PointOutOfRange { point: b, size: cod_size });
        }
    }
    Ok(())
}

impl ChainMap {
    /// Builds a validated map. Pairs may arrive in any order; they are
    /// stored sorted by domain point.
    pub fn new(
        dom_size: usize,
        cod_size: usize,
        mut pairs: Vec<(usize, usize)>,
    ) -> Result<Self, ChainMapError> {
        pairs.sort_unstable_by_key(|&(a, _)| a);
        validate(dom_size, cod_size, &pairs)?;
        Ok(ChainMap { dom_size, cod_size, pairs })
    }

    /// The identity map on `{0, .., n-1}`.
    pub fn identity(n: usize) -> Self {
        ChainMap {
            dom_size: n,
            cod_size: n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn dom_size(&self) -> usize {
        self.dom_size
    }

    pub fn cod_size(&self) -> usize {
        self.cod_size
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Domain points in increasing order.
    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(a, _)| a)
    }

    /// Image values with multiplicity, in nondecreasing order.
    pub fn simage(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(_, b)| b)
    }

    /// Distinct image values in increasing order.
    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.simage().collect();
        im.dedup();
        im
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |&(a, _)| a)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// True iff `xα ≤ x` on the whole domain.
    pub fn is_decreasing(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| b <= a)
    }

    /// True iff the domain is the whole chain.
    pub fn is_full(&self) -> bool {
        self.pairs.len() == self.dom_size
    }

    /// Left-to-right composition: `x (fg) = (xf) g`. Requires the codomain
    /// of `self` to equal the domain chain of `g`, and the combined
    /// codomain to stay within one point of this map's chain.
    pub fn compose(&self, g: &ChainMap) -> Result<ChainMap, ChainMapError> {
        if self.cod_size != g.dom_size {
            return Err(ChainMapError::SizeMismatch(self.cod_size, g.dom_size));
        }
        if g.cod_size > self.dom_size + 1 {
            return Err(ChainMapError::BadCodomain {
                dom_size: self.dom_size,
                cod_size: g.cod_size,
            });
        }
        let pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .filter_map(|&(a, b)| g.apply(b).map(|c| (a, c)))
            .collect();
        debug_assert!(validate(self.dom_size, g.cod_size, &pairs).is_ok());
        Ok(ChainMap {
            dom_size: self.dom_size,
            cod_size: g.cod_size,
            pairs,
        })
    }

    /// True iff the map squares to itself. Requires a square map
    /// (codomain = domain chain).
    pub fn is_idempotent(&self) -> Result<bool, ChainMapError> {
        if self.cod_size != self.dom_size {
            return Err(ChainMapError::SizeMismatch(self.dom_size, self.cod_size));
        }
        Ok(self.compose(self)? == *self)
    }

    pub fn belongs_to(&self, class: ClassId) -> bool {
        let square = self.cod_size == self.dom_size;
        match class {
            ClassId::Pc => square && self.is_decreasing(),
            ClassId::C => square && self.is_decreasing() && self.is_full(),
            ClassId::Po => square,
            ClassId::O => square && self.is_full(),
            ClassId::Del => self.cod_size == self.dom_size + 1,
            ClassId::Q => square && self.is_decreasing() && self.apply(0).is_some(),
            ClassId::Qp => square && self.is_decreasing() && self.apply(0).is_none(),
        }
    }

    pub fn stats(&self) -> MapStats {
        let dom_card = self.pairs.len();
        let mut im_card = 0;
        let mut prev = None;
        for b in self.simage() {
            if prev != Some(b) {
                im_card += 1;
                prev = Some(b);
            }
        }
        MapStats {
            dom_card,
            im_card,
            max_im: self.pairs.last().map(|&(_, b)| b),
        }
    }

    /// The same pairs viewed into the codomain extended by one point.
    /// Already-extended maps are returned unchanged.
    pub fn widen_codomain(&self) -> ChainMap {
        ChainMap {
            dom_size: self.dom_size,
            cod_size: self.dom_size + 1,
            pairs: self.pairs.clone(),
        }
    }

    /// Removes the bottom point from the domain of a [`ClassId::Q`] member.
    /// (Decreasingness forces that point to map to 0, so nothing else moves.)
    pub fn phi_q(&self) -> Result<ChainMap, ChainMapError> {
        if !self.belongs_to(ClassId::Q) {
            return Err(ChainMapError::NotInClass(ClassId::Q));
        }
        Ok(ChainMap {
            dom_size: self.dom_size,
            cod_size: self.cod_size,
            pairs: self.pairs[1..].to_vec(),
        })
    }

    /// Adjoins the pair `(0, 0)` to a [`ClassId::Qp`] member; inverse of
    /// [`ChainMap::phi_q`]. The empty chain has no bottom point to adjoin.
    pub fn phi_q_inv(&self) -> Result<ChainMap, ChainMapError> {
        if !self.belongs_to(ClassId::Qp) {
            return Err(ChainMapError::NotInClass(ClassId::Qp));
        }
        if self.dom_size == 0 {
            return Err(ChainMapError::PointOutOfRange { point: 0, size: 0 });
        }
        let mut pairs = Vec::with_capacity(self.pairs.len() + 1);
        pairs.push((0, 0));
        pairs.extend_from_slice(&self.pairs);
        Ok(ChainMap {
            dom_size: self.dom_size,
            cod_size: self.cod_size,
            pairs,
        })
    }

    /// Canonical text form, e.g. `{"n":4,"m":4,"map":[[1,1],[3,1]]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain map serialization cannot fail")
    }
}

/// Compact two-row display mirroring the column notation: `(1 3 / 1 1)`.
impl fmt::Display for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.domain().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(" / ")?;
        for (i, b) in self.simage().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize)]
struct ChainMapRepr<'a> {
    n: usize,
    m: usize,
    map: &'a [(usize, usize)],
}

#[derive(Deserialize)]
struct ChainMapOwned {
    n: usize,
    m: usize,
    map: Vec<(usize, usize)>,
}

impl Serialize for ChainMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ChainMapRepr {
            n: self.dom_size,
            m: self.cod_size,
            map: &self.pairs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChainMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ChainMapOwned::deserialize(deserializer)?;
        ChainMap::new(repr.n, repr.m, repr.map).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: usize, m: usize, pairs: &[(usize, usize)]) -> ChainMap {
        ChainMap::new(n, m, pairs.to_vec()).unwrap()
    }

    #[test]
    fn column_form_example_validates() {
        let alpha = map(4, 4, &[(1, 1), (3, 1)]);
        assert_eq!(alpha.domain().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(alpha.simage().collect::<Vec<_>>(), vec![1, 1]);
        assert!(alpha.is_decreasing());
        assert!(alpha.belongs_to(ClassId::Pc));
        assert!(!alpha.belongs_to(ClassId::C));
    }

    #[test]
    fn empty_map_is_valid() {
        let e = map(3, 3, &[]);
        assert!(e.is_decreasing());
        assert!(!e.is_full());
        assert_eq!(e.stats(), MapStats { dom_card: 0, im_card: 0, max_im: None });
    }

    #[test]
    fn pairs_sorted_on_construction() {
        let m = map(4, 4, &[(3, 1), (1, 1)]);
        assert_eq!(m.pairs(), &[(1, 1), (3, 1)]);
    }

    #[test]
    fn constructor_rejections() {
        assert_eq!(
            ChainMap::new(2, 2, vec![(0, 1), (1, 0)]),
            Err(ChainMapError::NonMonotoneImage(1))
        );
        assert_eq!(
            ChainMap::new(2, 2, vec![(0, 0), (0, 1)]),
            Err(ChainMapError::DuplicateDomainPoint(0))
        );
        assert_eq!(
            ChainMap::new(2, 2, vec![(2, 0)]),
            Err(ChainMapError::PointOutOfRange { point: 2, size: 2 })
        );
        assert_eq!(
            ChainMap::new(2, 2, vec![(0, 2)]),
            Err(ChainMapError::PointOutOfRange { point: 2, size: 2 })
        );
        assert_eq!(
            ChainMap::new(2, 4, vec![]),
            Err(ChainMapError::BadCodomain { dom_size: 2, cod_size: 4 })
        );
        // dom_size = 0 admits only the empty map
        assert!(ChainMap::new(0, 0, vec![]).is_ok());
        assert!(ChainMap::new(0, 1, vec![]).is_ok());
    }

    #[test]
    fn decreasing_predicate() {
        assert!(ChainMap::identity(4).is_decreasing());
        assert!(!map(2, 2, &[(0, 1)]).is_decreasing());
    }

    #[test]
    fn full_predicate() {
        assert!(ChainMap::identity(2).is_full());
        assert!(!map(2, 2, &[]).is_full());
        assert!(map(2, 3, &[(0, 0), (1, 2)]).is_full());
    }

    #[test]
    fn compose_examples() {
        let id = ChainMap::identity(2);
        let f = map(2, 2, &[(0, 0)]);
        let g = map(2, 2, &[(1, 0)]);
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
        // 0f = 0, and 0 is not in Dom g, so the composite is empty
        assert_eq!(f.compose(&g).unwrap(), map(2, 2, &[]));
        let e = map(2, 2, &[(0, 0), (1, 0)]);
        assert_eq!(e.compose(&e).unwrap(), e);
        assert_eq!(
            f.compose(&ChainMap::identity(3)),
            Err(ChainMapError::SizeMismatch(2, 3))
        );
        // an extended map may feed a square map on the larger chain, but
        // chaining two extensions would overflow the codomain invariant
        let extended = map(2, 3, &[(0, 2)]);
        assert_eq!(
            extended.compose(&ChainMap::identity(3)).unwrap(),
            extended
        );
        assert_eq!(
            extended.compose(&map(3, 4, &[(2, 3)])),
            Err(ChainMapError::BadCodomain { dom_size: 2, cod_size: 4 })
        );
    }

    #[test]
    fn idempotency_examples() {
        assert!(map(2, 2, &[]).is_idempotent().unwrap());
        assert!(!map(2, 2, &[(1, 0)]).is_idempotent().unwrap());
        assert!(map(2, 2, &[(0, 0), (1, 0)]).is_idempotent().unwrap());
        assert!(map(2, 3, &[]).is_idempotent().is_err());
    }

    #[test]
    fn class_membership() {
        let alpha = map(4, 4, &[(1, 1), (3, 1)]);
        assert!(alpha.belongs_to(ClassId::Pc));
        assert!(!alpha.belongs_to(ClassId::C));
        assert!(alpha.belongs_to(ClassId::Po));
        assert!(!alpha.belongs_to(ClassId::Del));
        assert!(map(2, 2, &[(0, 0), (1, 1)]).belongs_to(ClassId::Q));
        assert!(map(2, 2, &[(1, 1)]).belongs_to(ClassId::Qp));
        assert!(map(2, 3, &[(1, 2)]).belongs_to(ClassId::Del));
        // the empty map avoids the bottom point
        assert!(map(2, 2, &[]).belongs_to(ClassId::Qp));
        assert!(!map(2, 2, &[]).belongs_to(ClassId::Q));
    }

    #[test]
    fn stats_of_larger_map() {
        let alpha = map(7, 7, &[(0, 0), (2, 0), (3, 0), (5, 4), (6, 4)]);
        assert_eq!(
            alpha.stats(),
            MapStats { dom_card: 5, im_card: 2, max_im: Some(4) }
        );
        assert_eq!(alpha.image(), vec![0, 4]);
        assert_eq!(
            ChainMap::identity(3).stats(),
            MapStats { dom_card: 3, im_card: 3, max_im: Some(2) }
        );
    }

    #[test]
    fn phi_q_round_trips() {
        let id2 = ChainMap::identity(2);
        let dropped = id2.phi_q().unwrap();
        assert_eq!(dropped, map(2, 2, &[(1, 1)]));
        assert_eq!(dropped.phi_q_inv().unwrap(), id2);
        assert_eq!(map(2, 2, &[(0, 0)]).phi_q().unwrap(), map(2, 2, &[]));
        assert_eq!(
            map(2, 2, &[(1, 0)]).phi_q_inv().unwrap(),
            map(2, 2, &[(0, 0), (1, 0)])
        );
        assert_eq!(
            map(2, 2, &[(1, 0)]).phi_q(),
            Err(ChainMapError::NotInClass(ClassId::Q))
        );
        assert_eq!(
            id2.phi_q_inv(),
            Err(ChainMapError::NotInClass(ClassId::Qp))
        );
        // the empty chain has no bottom point
        assert_eq!(
            map(0, 0, &[]).phi_q_inv(),
            Err(ChainMapError::PointOutOfRange { point: 0, size: 0 })
        );
    }

    #[test]
    fn widen_preserves_pairs() {
        let alpha = map(4, 4, &[(1, 1), (3, 1)]);
        let wide = alpha.widen_codomain();
        assert_eq!(wide.cod_size(), 5);
        assert_eq!(wide.pairs(), alpha.pairs());
        assert_eq!(wide.widen_codomain(), wide);
    }

    #[test]
    fn json_round_trip() {
        let alpha = map(4, 4, &[(1, 1), (3, 1)]);
        let text = alpha.to_json();
        assert_eq!(text, r#"{"n":4,"m":4,"map":[[1,1],[3,1]]}"#);
        let back: ChainMap = serde_json::from_str(&text).unwrap();
        assert_eq!(back, alpha);
        // invalid inputs are rejected during deserialization
        assert!(serde_json::from_str::<ChainMap>(r#"{"n":2,"m":2,"map":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn compact_display() {
        assert_eq!(map(4, 4, &[(1, 1), (3, 1)]).to_string(), "(1 3 / 1 1)");
        assert_eq!(map(3, 3, &[]).to_string(), "( / )");
    }

    #[test]
    fn compose_associativity_spot_check() {
        let maps = [
            map(3, 3, &[(0, 0), (2, 1)]),
            map(3, 3, &[(1, 1), (2, 2)]),
            map(3, 3, &[(0, 0), (1, 0), (2, 0)]),
        ];
        for f in &maps {
            for g in &maps {
                for h in &maps {
                    let left = f.compose(g).unwrap().compose(h).unwrap();
                    let right = f.compose(&g.compose(h).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn compose_associativity_exhaustive() {
        use crate::enumeration::enumerate_class;
        for class in ClassId::ALL {
            if class == ClassId::Del {
                continue; // extended-codomain maps do not compose among themselves
            }
            for n in 0..=4 {
                let all: Vec<ChainMap> = enumerate_class(class, n).unwrap().collect();
                for f in &all {
                    for g in &all {
                        let fg = f.compose(g).unwrap();
                        for h in &all {
                            let left = fg.compose(h).unwrap();
                            let right = f.compose(&g.compose(h).unwrap()).unwrap();
                            assert_eq!(left, right, "{class} at n = {n}");
                        }
                    }
                }
            }
        }
    }
}
