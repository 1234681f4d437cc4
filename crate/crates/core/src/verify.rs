//! Independent checks on constructed objects: Hilbert functions of point sets
//! by exact rank, stick-figure incidence, and hypersurface vanishing.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::construction::StickFigure;
use crate::error::{Error, Result};
use crate::exactq::{QMatrix, Rational};
use crate::hvector::binomial;
use crate::projgeom::{eval_poly, Line3, LineMeet, Poly, ProjPoint};

/// Pairwise distinct points of `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: Vec<ProjPoint>,
}

impl PointSet {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Degenerate("empty point set".into()));
        };
        let n = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != n) {
            return Err(Error::Dimension(format!("point {p} is not in P^{n}")));
        }
        let mut seen = HashSet::with_capacity(points.len());
        if let Some(p) = points.iter().find(|p| !seen.insert(*p)) {
            return Err(Error::Degenerate(format!(
                "points not distinct: {p} repeated"
            )));
        }
        Ok(PointSet { n, points })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Exponent vectors of degree `d` in `nvars` variables, lexicographically
/// decreasing (`x0^d` first).
pub fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(nvars - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Matrix whose `(p, I)` entry is the monomial `X^I` evaluated at point `p`.
pub fn evaluation_matrix(ps: &PointSet, d: u32) -> QMatrix {
    let monos = monomials(ps.n + 1, d);
    let rows = ps
        .points
        .iter()
        .map(|p| {
            let powers: Vec<Vec<BigInt>> = p
                .coords()
                .iter()
                .map(|c| (0..=d).map(|e| Pow::pow(c, e)).collect())
                .collect();
            monos
                .iter()
                .map(|m| {
                    let v = m.iter().enumerate().fold(BigInt::one(), |acc, (var, &e)| {
                        acc * &powers[var][e as usize]
                    });
                    Rational::from_integer(v)
                })
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows).expect("rectangular")
}

/// `HF(d) = dim R_d - dim I(X)_d`, the rank of the degree-`d` evaluation matrix.
pub fn hilbert_function(ps: &PointSet, d: u32) -> usize {
    // HF(d) <= |points| and <= dim R_d; once HF(d) = |points| it stays there.
    evaluation_matrix(ps, d).rank()
}

/// Hilbert function values and the h-vector of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFReport {
    /// `(d, HF(d))` for `d = 0..=stabilized_at` (or up to the requested degree).
    pub values: Vec<(u32, usize)>,
    /// First differences of `HF`, up to stabilization.
    pub h_vector: Vec<usize>,
    /// First `d` with `HF(d) = |points|`.
    pub stabilized_at: u32,
}

/// Computes `HF(0), HF(1), ...` until it reaches `|points|`, plus any
/// further degrees up to `min_degree`. Degrees past stabilization are filled
/// in without a rank computation.
pub fn hilbert_report(ps: &PointSet, min_degree: Option<u32>) -> Result<HFReport> {
    let count = ps.len();
    let cap = count as u32;
    let mut values = Vec::new();
    let mut stabilized_at = None;
    let mut d = 0u32;
    loop {
        let hf = if stabilized_at.is_some() {
            count
        } else {
            hilbert_function(ps, d)
        };
        if let Some(&(_, prev)) = values.last() {
            if hf < prev {
                return Err(Error::Invariant(format!("HF decreased at degree {d}")));
            }
        }
        let dim_rd = binomial(d as u64 + ps.n as u64, ps.n as u64);
        if hf as u128 > dim_rd || hf > count {
            return Err(Error::Invariant(format!(
                "HF({d}) = {hf} exceeds its bounds"
            )));
        }
        values.push((d, hf));
        if hf == count && stabilized_at.is_none() {
            stabilized_at = Some(d);
        }
        let done = stabilized_at.is_some() && min_degree.map_or(true, |m| d >= m);
        if done {
            break;
        }
        if stabilized_at.is_none() && d >= cap {
            return Err(Error::Invariant(format!(
                "Hilbert function did not reach {count} by degree {cap}"
            )));
        }
        d += 1;
    }
    let stabilized_at = stabilized_at.expect("loop exits only after stabilization");
    let h_vector = (0..=stabilized_at as usize)
        .map(|i| values[i].1 - if i == 0 { 0 } else { values[i - 1].1 })
        .collect();
    Ok(HFReport {
        values,
        h_vector,
        stabilized_at,
    })
}

/// Hilbert function until stabilization and its first difference.
pub fn h_vector_of(ps: &PointSet) -> Result<HFReport> {
    hilbert_report(ps, None)
}

/// A failed stick-figure condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StickViolation {
    /// Two lines coincide.
    SameLine((usize, usize), (usize, usize)),
    /// Two lines sharing a row or column do not meet.
    MissingMeet((usize, usize), (usize, usize)),
    /// Two lines sharing neither row nor column meet.
    ExtraMeet((usize, usize), (usize, usize), ProjPoint),
    /// Three lines through one point.
    TriplePoint([(usize, usize); 3], ProjPoint),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StickReport {
    pub pairs_checked: usize,
    pub meeting_points: usize,
    pub violation: Option<StickViolation>,
}

impl StickReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustive check of a row-major grid of lines: every pair meets iff the
/// two cells share exactly one of row/column, and no point is on three lines.
///
/// Any point common to three lines is also the meeting point of two of them,
/// so the triple condition is checked by testing every pairwise meeting point
/// against every other line.
pub fn check_line_grid(nrows: usize, ncols: usize, lines: &[Line3]) -> Result<StickReport> {
    if lines.len() != nrows * ncols {
        return Err(Error::Dimension(format!(
            "{} lines for a {nrows}x{ncols} grid",
            lines.len()
        )));
    }
    let cell = |x: usize| (x / ncols, x % ncols);
    let mut pairs_checked = 0;
    let mut meets: Vec<(usize, usize, ProjPoint)> = Vec::new();
    for x in 0..lines.len() {
        for y in x + 1..lines.len() {
            pairs_checked += 1;
            let (a, b) = (cell(x), cell(y));
            let should_meet = (a.0 == b.0) != (a.1 == b.1);
            let violation = match lines[x].meet(&lines[y]) {
                LineMeet::Same => Some(StickViolation::SameLine(a, b)),
                LineMeet::Point(p) if should_meet => {
                    meets.push((x, y, p));
                    None
                }
                LineMeet::Point(p) => Some(StickViolation::ExtraMeet(a, b, p)),
                LineMeet::Skew if should_meet => Some(StickViolation::MissingMeet(a, b)),
                LineMeet::Skew => None,
            };
            if violation.is_some() {
                return Ok(StickReport {
                    pairs_checked,
                    meeting_points: meets.len(),
                    violation,
                });
            }
        }
    }
    for (x, y, p) in &meets {
        if let Some(z) = (0..lines.len()).find(|&z| z != *x && z != *y && lines[z].contains(p)) {
            let mut trio = [cell(*x), cell(*y), cell(z)];
            trio.sort();
            return Ok(StickReport {
                pairs_checked,
                meeting_points: meets.len(),
                violation: Some(StickViolation::TriplePoint(trio, p.clone())),
            });
        }
    }
    Ok(StickReport {
        pairs_checked,
        meeting_points: meets.len(),
        violation: None,
    })
}

pub fn check_stick_figure(sf: &StickFigure) -> Result<StickReport> {
    check_line_grid(sf.nrows(), sf.ncols(), sf.lines())
}

/// `true` iff `f` vanishes at every point.
pub fn vanishes_on(f: &Poly, pts: &[ProjPoint]) -> bool {
    pts.iter()
        .all(|p| eval_poly(f, p) == Rational::from_integer(0.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_z, stick_figure, AConfig};
    use crate::exactq::rat;
    use crate::projgeom::{LinearForm, Poly};

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }

    #[test]
    fn monomial_order() {
        let m = monomials(3, 2);
        assert_eq!(m.len(), 6);
        assert_eq!(m[0], vec![2, 0, 0]);
        assert_eq!(m[1], vec![1, 1, 0]);
        assert_eq!(m[5], vec![0, 0, 2]);
        assert_eq!(monomials(4, 3).len(), 20);
    }

    #[test]
    fn single_point() {
        let ps = PointSet::new(vec![pt(&[1, 2, 3, 4])]).unwrap();
        for d in 0..4 {
            assert_eq!(hilbert_function(&ps, d), 1);
        }
        let r = h_vector_of(&ps).unwrap();
        assert_eq!(r.h_vector, vec![1]);
        assert_eq!(r.stabilized_at, 0);
    }

    #[test]
    fn duplicates_rejected() {
        let err = PointSet::new(vec![pt(&[1, 1, 1, 1]), pt(&[2, 2, 2, 2])]).unwrap_err();
        assert!(matches!(err, Error::Degenerate(ref m) if m.contains("not distinct")));
    }

    #[test]
    fn planar_z_has_hf_3_in_degree_1() {
        let cfg = AConfig::standard(2, 2);
        let ps = PointSet::new(build_z(&cfg, 2, 2).unwrap()).unwrap();
        assert_eq!(hilbert_function(&ps, 1), 3);
        assert_eq!(h_vector_of(&ps).unwrap().h_vector, vec![1, 2, 1]);
    }

    #[test]
    fn four_general_coplanar_points() {
        let ps = PointSet::new(vec![
            pt(&[1, 0, 0, 0]),
            pt(&[0, 1, 0, 0]),
            pt(&[0, 0, 1, 0]),
            pt(&[1, 1, 1, 0]),
        ])
        .unwrap();
        assert_eq!(h_vector_of(&ps).unwrap().h_vector, vec![1, 2, 1]);
    }

    #[test]
    fn report_extends_past_stabilization() {
        let ps = PointSet::new(vec![pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])]).unwrap();
        let r = hilbert_report(&ps, Some(4)).unwrap();
        assert_eq!(r.values, vec![(0, 1), (1, 2), (2, 2), (3, 2), (4, 2)]);
        assert_eq!(r.h_vector, vec![1, 1]);
    }

    #[test]
    fn hf_rank_nullity() {
        let cfg = AConfig::standard(3, 3);
        let ps = PointSet::new(build_z(&cfg, 3, 3).unwrap()).unwrap();
        for d in 0..4 {
            let m = evaluation_matrix(&ps, d);
            let forms_through = m.kernel_basis().len();
            assert_eq!(hilbert_function(&ps, d), m.cols() - forms_through);
        }
    }

    #[test]
    fn default_stick_passes() {
        let sf = stick_figure(&AConfig::standard(3, 4), 3, 4).unwrap();
        let r = check_stick_figure(&sf).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.pairs_checked, 66);
        // 3 * C(4,2) same-row pairs + 4 * C(3,2) same-column pairs.
        assert_eq!(r.meeting_points, 18 + 12);
        let one = stick_figure(&AConfig::standard(1, 1), 1, 1).unwrap();
        assert!(check_stick_figure(&one).unwrap().passed());
    }

    #[test]
    fn duplicated_line_fails() {
        let sf = stick_figure(&AConfig::standard(2, 2), 2, 2).unwrap();
        let mut lines = sf.lines().to_vec();
        lines[3] = lines[0].clone();
        let r = check_line_grid(2, 2, &lines).unwrap();
        assert_eq!(r.violation, Some(StickViolation::SameLine((0, 0), (1, 1))));
    }

    #[test]
    fn concurrent_lines_fail() {
        let f = |c: &[i64]| LinearForm::from_ints(c).unwrap();
        // Three lines through [0:0:0:1] arranged as a 1x3 grid.
        let lines = vec![
            Line3::new(f(&[1, 0, 0, 0]), f(&[0, 1, 0, 0])).unwrap(),
            Line3::new(f(&[1, 0, 0, 0]), f(&[0, 0, 1, 0])).unwrap(),
            Line3::new(f(&[0, 1, 0, 0]), f(&[0, 0, 1, 0])).unwrap(),
        ];
        let r = check_line_grid(1, 3, &lines).unwrap();
        assert!(matches!(r.violation, Some(StickViolation::TriplePoint(..))));
    }

    #[test]
    fn vanishing_examples() {
        let x0 = Poly::linear(&[rat(1), rat(0), rat(0), rat(0)]);
        assert!(vanishes_on(&x0, &[pt(&[0, 1, 1, 1])]));
        assert!(!vanishes_on(&x0, &[pt(&[1, 1, 1, 1])]));
        assert!(vanishes_on(&x0, &[]));
    }
}
