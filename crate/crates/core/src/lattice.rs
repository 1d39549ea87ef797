//! Lattice paths in an `n × n` square over the steps `H = (1,0)`,
//! `V = (0,1)` and `D = (1,1)`.
//!
//! A [`LatticePath`] runs from `(0,0)` to `(n,n)`; equal x- and
//! y-displacements force `#H = #V` on every path. Because the height never
//! decreases, a path visits the levels `0..n` in order and all horizontal
//! steps at a level precede the single step that leaves it — the
//! [`LevelProfile`] records exactly that normal form: per-level horizontal
//! run lengths plus the leaving tag (`V` or `D`) of each level below the
//! top.

use std::fmt;

use thiserror::Error;

/// One unit step of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Horizontal, `(1, 0)`.
    H,
    /// Vertical, `(0, 1)`.
    V,
    /// Diagonal, `(1, 1)`.
    D,
}

impl Step {
    pub fn dx(self) -> usize {
        match self {
            Step::H | Step::D => 1,
            Step::V => 0,
        }
    }

    pub fn dy(self) -> usize {
        match self {
            Step::V | Step::D => 1,
            Step::H => 0,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::H => 'H',
            Step::V => 'V',
            Step::D => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'H' => Some(Step::H),
            'V' => Some(Step::V),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Errors from parsing or assembling paths and profiles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid step character {ch:?} at position {pos}")]
    BadCharacter { ch: char, pos: usize },
    #[error("path ends at ({x}, {y}), expected ({side}, {side})")]
    WrongEndpoint { x: usize, y: usize, side: usize },
    #[error("profile inconsistent: {0}")]
    ProfileInconsistent(String),
}

/// Statistics of a path used by the counting refinements: vertical step
/// count, number of maximal horizontal runs, level of the last run, whether
/// the final step is horizontal, and whether any diagonal step occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStats {
    pub v_count: usize,
    pub h_segments: usize,
    pub last_h_level: Option<usize>,
    pub last_step_is_h: bool,
    pub has_diag: bool,
}

/// A lattice path from `(0,0)` to `(side, side)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    side: usize,
    steps: Vec<Step>,
}

impl LatticePath {
    /// Builds a path, checking that the steps land on `(side, side)`.
    pub fn new(side: usize, steps: Vec<Step>) -> Result<Self, PathError> {
        let x: usize = steps.iter().map(|s| s.dx()).sum();
        let y: usize = steps.iter().map(|s| s.dy()).sum();
        if x != side || y != side {
            return Err(PathError::WrongEndpoint { x, y, side });
        }
        Ok(LatticePath { side, steps })
    }

    /// Parses a step string such as `"HHHVDVVHHDVV"`.
    pub fn parse(text: &str, side: usize) -> Result<Self, PathError> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(pos, ch)| Step::from_char(ch).ok_or(PathError::BadCharacter { ch, pos }))
            .collect::<Result<Vec<_>, _>>()?;
        LatticePath::new(side, steps)
    }

    /// The step string; inverse of [`LatticePath::parse`].
    pub fn render(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// All visited lattice points, starting with `(0, 0)`.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.steps {
            x += s.dx();
            y += s.dy();
            pts.push((x, y));
        }
        pts
    }

    /// True iff no vertex rises above the line `y = x`.
    pub fn is_subdiagonal(&self) -> bool {
        let (mut x, mut y) = (0usize, 0usize);
        for s in &self.steps {
            x += s.dx();
            y += s.dy();
            if y > x {
                return false;
            }
        }
        true
    }

    pub fn stats(&self) -> PathStats {
        let mut v_count = 0;
        let mut h_segments = 0;
        let mut last_h_level = None;
        let mut has_diag = false;
        let mut y = 0;
        let mut prev_was_h = false;
        for s in &self.steps {
            match s {
                Step::H => {
                    if !prev_was_h {
                        h_segments += 1;
                    }
                    last_h_level = Some(y);
                }
                Step::V => {
                    v_count += 1;
                    y += 1;
                }
                Step::D => {
                    has_diag = true;
                    y += 1;
                }
            }
            prev_was_h = *s == Step::H;
        }
        PathStats {
            v_count,
            h_segments,
            last_h_level,
            last_step_is_h: self.steps.last() == Some(&Step::H),
            has_diag,
        }
    }

    /// The idempotent step pattern: no diagonal step directly follows a
    /// horizontal run, and every horizontal run of length `k` is followed by
    /// exactly `k` vertical steps, then optionally diagonal steps, before
    /// the next run or the end of the path.
    pub fn is_idempotent_pattern(&self) -> bool {
        let s = &self.steps;
        let mut i = 0;
        while i < s.len() {
            if s[i] != Step::H {
                i += 1;
                continue;
            }
            let mut run = 0;
            while i < s.len() && s[i] == Step::H {
                run += 1;
                i += 1;
            }
            let mut verticals = 0;
            while i < s.len() && s[i] == Step::V {
                verticals += 1;
                i += 1;
            }
            if verticals != run {
                return false;
            }
            while i < s.len() && s[i] == Step::D {
                i += 1;
            }
            if i < s.len() && s[i] != Step::H {
                return false;
            }
        }
        true
    }

    /// Reads off the per-level horizontal run lengths and leave tags.
    pub fn to_profile(&self) -> LevelProfile {
        let mut h = vec![0usize; self.side + 1];
        let mut leave = Vec::with_capacity(self.side);
        let mut y = 0;
        for s in &self.steps {
            match s {
                Step::H => h[y] += 1,
                Step::V | Step::D => {
                    leave.push(*s);
                    y += 1;
                }
            }
        }
        LevelProfile { h, leave }
    }

    /// A drawing of the square grid, the diagonal `y = x`, and the path.
    pub fn to_svg(&self) -> String {
        let n = self.side;
        let scale = 40;
        let margin = 20;
        let extent = n * scale + 2 * margin;
        let px = |x: usize| margin + x * scale;
        let py = |y: usize| margin + (n - y) * scale;
        let mut svg = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{extent}\" height=\"{extent}\" \
             viewBox=\"0 0 {extent} {extent}\">\n"
        );
        svg.push_str("  <g stroke=\"#cccccc\" stroke-width=\"1\">\n");
        for i in 0..=n {
            svg.push_str(&format!(
                "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n",
                px(i),
                py(0),
                py(n)
            ));
            svg.push_str(&format!(
                "    <line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>\n",
                py(i),
                px(0),
                px(n)
            ));
        }
        svg.push_str("  </g>\n");
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888888\" \
             stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n",
            px(0),
            py(0),
            px(n),
            py(n)
        ));
        let points: Vec<String> = self
            .vertices()
            .into_iter()
            .map(|(x, y)| format!("{},{}", px(x), py(y)))
            .collect();
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\" \
             stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n",
            points.join(" ")
        ));
        svg.push_str("</svg>\n");
        svg
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The level decomposition of a path: `h[m]` horizontal steps at level `m`
/// for `m = 0..=side`, and for each level below the top the tag of the step
/// that leaves it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    h: Vec<usize>,
    leave: Vec<Step>,
}

impl LevelProfile {
    /// Builds a profile; `h` must have one more entry than `leave`, the
    /// tags must be `V` or `D`, and `Σ h + #D` must equal the side.
    pub fn new(h: Vec<usize>, leave: Vec<Step>) -> Result<Self, PathError> {
        if h.len() != leave.len() + 1 {
            return Err(PathError::ProfileInconsistent(format!(
                "{} run lengths for {} levels",
                h.len(),
                leave.len()
            )));
        }
        if leave.contains(&Step::H) {
            return Err(PathError::ProfileInconsistent(
                "leave tags must be V or D".to_string(),
            ));
        }
        let side = leave.len();
        let total = h.iter().sum::<usize>() + leave.iter().filter(|&&s| s == Step::D).count();
        if total != side {
            return Err(PathError::ProfileInconsistent(format!(
                "horizontal plus diagonal displacement {total} does not reach side {side}"
            )));
        }
        Ok(LevelProfile { h, leave })
    }

    pub fn side(&self) -> usize {
        self.leave.len()
    }

    pub fn run_lengths(&self) -> &[usize] {
        &self.h
    }

    pub fn leave_tags(&self) -> &[Step] {
        &self.leave
    }

    /// Emits the path: `h[m]` highs then the leave tag for each level,
    /// then the top-level run.
    pub fn to_path(&self) -> LatticePath {
        let side = self.side();
        let mut steps = Vec::with_capacity(2 * side);
        for m in 0..side {
            steps.extend(std::iter::repeat_n(Step::H, self.h[m]));
            steps.push(self.leave[m]);
        }
        steps.extend(std::iter::repeat_n(Step::H, self.h[side]));
        LatticePath::new(side, steps).expect("profile invariant lands the path on (side, side)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(text: &str, side: usize) -> LatticePath {
        LatticePath::parse(text, side).unwrap()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(path("HV", 1).render(), "HV");
        assert_eq!(path("D", 1).render(), "D");
        assert_eq!(path("HHHVDVVHHDVV", 7).render(), "HHHVDVVHHDVV");
        assert_eq!(path("", 0).render(), "");
    }

    #[test]
    fn parse_rejections() {
        assert_eq!(
            LatticePath::parse("HH", 1),
            Err(PathError::WrongEndpoint { x: 2, y: 0, side: 1 })
        );
        assert_eq!(
            LatticePath::parse("HVDV", 3),
            Err(PathError::WrongEndpoint { x: 2, y: 3, side: 3 })
        );
        assert_eq!(
            LatticePath::parse("HXV", 1),
            Err(PathError::BadCharacter { ch: 'X', pos: 1 })
        );
    }

    #[test]
    fn horizontal_equals_vertical_count() {
        for (text, side) in [("HHHVDVVHHDVV", 7), ("DDD", 3), ("HVVDVHH", 4)] {
            let p = path(text, side);
            let h = p.steps().iter().filter(|&&s| s == Step::H).count();
            let v = p.steps().iter().filter(|&&s| s == Step::V).count();
            assert_eq!(h, v, "{text}");
        }
    }

    #[test]
    fn subdiagonal_predicate() {
        assert!(path("HV", 1).is_subdiagonal());
        assert!(!path("VH", 1).is_subdiagonal());
        assert!(path("D", 1).is_subdiagonal());
        assert!(path("HHHVDVVHHDVV", 7).is_subdiagonal());
        assert!(!path("HVVDVHH", 4).is_subdiagonal());
    }

    #[test]
    fn stats_examples() {
        assert_eq!(
            path("HHHVDVVHHDVV", 7).stats(),
            PathStats {
                v_count: 5,
                h_segments: 2,
                last_h_level: Some(4),
                last_step_is_h: false,
                has_diag: true,
            }
        );
        assert_eq!(
            path("DDD", 3).stats(),
            PathStats {
                v_count: 0,
                h_segments: 0,
                last_h_level: None,
                last_step_is_h: false,
                has_diag: true,
            }
        );
        assert_eq!(
            path("HVVDVHH", 4).stats(),
            PathStats {
                v_count: 3,
                h_segments: 2,
                last_h_level: Some(4),
                last_step_is_h: true,
                has_diag: true,
            }
        );
    }

    #[test]
    fn idempotent_pattern_examples() {
        assert!(path("HHVV", 2).is_idempotent_pattern());
        assert!(path("HVD", 2).is_idempotent_pattern());
        assert!(!path("HDV", 2).is_idempotent_pattern());
        assert!(path("DHV", 2).is_idempotent_pattern());
        assert!(path("HVHV", 2).is_idempotent_pattern());
        // only one vertical step follows the run of two
        assert!(!path("VHHV", 2).is_idempotent_pattern());
        // a vertical step may not appear among the trailing diagonals
        assert!(!path("HVDVH", 3).is_idempotent_pattern());
    }

    #[test]
    fn profile_of_mixed_step_path() {
        let profile = path("HHHVDVVHHDVV", 7).to_profile();
        assert_eq!(profile.run_lengths(), &[3, 0, 0, 0, 2, 0, 0, 0]);
        assert_eq!(
            profile.leave_tags(),
            &[Step::V, Step::D, Step::V, Step::V, Step::D, Step::V, Step::V]
        );
        assert_eq!(profile.to_path(), path("HHHVDVVHHDVV", 7));
    }

    #[test]
    fn profile_of_all_diagonal_path() {
        let profile = path("DDD", 3).to_profile();
        assert_eq!(profile.run_lengths(), &[0, 0, 0, 0]);
        assert_eq!(profile.leave_tags(), &[Step::D, Step::D, Step::D]);
    }

    #[test]
    fn profile_to_path() {
        let profile = LevelProfile::new(vec![1, 0], vec![Step::V]).unwrap();
        assert_eq!(profile.to_path().render(), "HV");
    }

    #[test]
    fn profile_rejections() {
        assert!(LevelProfile::new(vec![1], vec![Step::V]).is_err());
        assert!(LevelProfile::new(vec![0, 0], vec![Step::H]).is_err());
        // one horizontal step plus one diagonal overshoots side 1
        assert!(LevelProfile::new(vec![1, 0], vec![Step::D]).is_err());
    }

    #[test]
    fn profile_round_trip_on_parsed_paths() {
        for (text, side) in [
            ("HHHVDVVHHDVV", 7),
            ("DDD", 3),
            ("HVVDVHH", 4),
            ("VH", 1),
            ("VVHH", 2),
            ("", 0),
        ] {
            let p = path(text, side);
            assert_eq!(p.to_profile().to_path(), p, "{text}");
        }
    }

    #[test]
    fn displacement_invariants() {
        for (text, side) in [("HHHVDVVHHDVV", 7), ("HVVDVHH", 4), ("DDD", 3)] {
            let p = path(text, side);
            let stats = p.stats();
            let d = p.steps().iter().filter(|&&s| s == Step::D).count();
            assert_eq!(stats.v_count + d, side);
            let profile = p.to_profile();
            assert_eq!(profile.run_lengths().iter().sum::<usize>() + d, side);
        }
    }

    #[test]
    fn svg_contains_diagonal_and_path() {
        let svg = path("DHHVDV", 4).to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("<polyline"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
