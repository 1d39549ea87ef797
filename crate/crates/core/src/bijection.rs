//! The level-by-level correspondence between chain maps and lattice paths.
//!
//! For a map on `{0, .., n-1}` the path through the `n × n` square is read
//! off bottom level up: at level `y < n`, one `H` per simage value equal to
//! `y`, then `V` if `y` lies in the domain and `D` otherwise; at level `n`
//! the `H`s for simage values equal to `n` (possible only for maps into the
//! extended codomain). Decoding reverses this: each `V` leaving level `y`
//! puts `y` in the domain, each `H` at level `y` appends `y` to the simage,
//! and the two sequences — equally long on any path — pair positionally.
//!
//! One local rule serves every class: decreasing maps come out exactly as
//! the subdiagonal paths, full maps as the diagonal-free ones, maps whose
//! image avoids the top of the extended codomain as the paths whose final
//! step is not horizontal.

use crate::chainmap::ChainMap;
use crate::lattice::{LatticePath, Step};

/// Encodes a map as its canonical path. Accepts both square maps and maps
/// into the codomain extended by one point; widening never changes the
/// emitted steps.
pub fn map_to_path(m: &ChainMap) -> LatticePath {
    let n = m.dom_size();
    let mut multiplicity = vec![0usize; n + 1];
    for b in m.simage() {
        multiplicity[b] += 1;
    }
    let mut in_domain = vec![false; n];
    for a in m.domain() {
        in_domain[a] = true;
    }
    let mut steps = Vec::with_capacity(2 * n);
    for y in 0..n {
        steps.extend(std::iter::repeat_n(Step::H, multiplicity[y]));
        steps.push(if in_domain[y] { Step::V } else { Step::D });
    }
    steps.extend(std::iter::repeat_n(Step::H, multiplicity[n]));
    LatticePath::new(n, steps).expect("encoded path lands on (n, n)")
}

/// Decodes a path in the `n × n` square into a map on `{0, .., n-1}` with
/// codomain `{0, .., n}`. Every path is in range.
pub fn path_to_map(p: &LatticePath) -> ChainMap {
    let mut domain = Vec::new();
    let mut simage = Vec::new();
    let mut y = 0;
    for step in p.steps() {
        match step {
            Step::H => simage.push(y),
            Step::V => {
                domain.push(y);
                y += 1;
            }
            Step::D => y += 1,
        }
    }
    let pairs: Vec<(usize, usize)> = domain.into_iter().zip(simage).collect();
    ChainMap::new(p.side(), p.side() + 1, pairs).expect("decoded map is order-preserving")
}
