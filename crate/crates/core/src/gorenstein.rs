//! Gorenstein point sets: the intersection of the curve `C1` (a staircase of
//! lines in the stick figure) with its residual `C2`.

use std::collections::HashSet;
use std::fmt;

use crate::construction::{
    intersect_lines, meeting_point_same_col, meeting_point_same_row, stick_figure, AConfig,
    StickFigure,
};
use crate::error::{Error, HVectorError, Result};
use crate::hvector::{HVector, SIProfile};
use crate::projgeom::ProjPoint;

/// Which two grid lines a point comes from (grid positions).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    /// Lines `(i, j)` and `(i, k)`.
    SameRow { i: usize, j: usize, k: usize },
    /// Lines `(i, j)` and `(k, j)`.
    SameCol { i: usize, k: usize, j: usize },
}

impl PointLabel {
    /// The two grid cells whose lines meet at the labelled point.
    pub fn cells(&self) -> [(usize, usize); 2] {
        match *self {
            PointLabel::SameRow { i, j, k } => [(i, j), (i, k)],
            PointLabel::SameCol { i, k, j } => [(i, j), (k, j)],
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::SameRow { i, j, k } => write!(f, "{i}{{{j},{k}}}"),
            PointLabel::SameCol { i, k, j } => write!(f, "{{{i},{k}}}{j}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GorensteinResult {
    pub points: Vec<ProjPoint>,
    pub labels: Vec<PointLabel>,
    pub h: HVector,
    pub c1_pairs: Vec<(usize, usize)>,
    pub stick: StickFigure,
}

impl GorensteinResult {
    /// Every point lies on exactly two grid lines, one in `C1` and one not.
    pub fn check_linkage(&self) -> Result<()> {
        let c1: HashSet<_> = self.c1_pairs.iter().copied().collect();
        for (p, label) in self.points.iter().zip(&self.labels) {
            let through: Vec<(usize, usize)> = self
                .stick
                .cells()
                .filter(|&(r, c)| self.stick.line(r, c).contains(p))
                .collect();
            let mut expected = label.cells().to_vec();
            expected.sort();
            if through != expected {
                return Err(Error::Invariant(format!(
                    "point {label} lies on lines {through:?}, expected {expected:?}"
                )));
            }
            let in_c1 = through.iter().filter(|cell| c1.contains(cell)).count();
            if in_c1 != 1 {
                return Err(Error::Invariant(format!(
                    "point {label} lies on {in_c1} lines of C1"
                )));
            }
        }
        Ok(())
    }
}

/// Lines of `C1`: cells `(i, j)` with `j < a_i`, for `i = 0..=t`.
pub fn select_c1(profile: &SIProfile) -> Result<Vec<(usize, usize)>> {
    let limit = (profile.s() - profile.t() + 1) as i64;
    let mut out = Vec::new();
    for (i, &ai) in profile.a().iter().enumerate() {
        if ai < 0 || ai > limit {
            return Err(HVectorError::ARange {
                index: i,
                value: ai,
                limit,
            }
            .into());
        }
        out.extend((0..ai as usize).map(|j| (i, j)));
    }
    Ok(out)
}

/// `sum_i a_i (s - t + 2 - a_i) + sum_{i<k} |a_i - a_k|`.
pub fn expected_count(profile: &SIProfile) -> u64 {
    let cols = profile.cols() as i64;
    let a = profile.a();
    let first: i64 = a.iter().map(|&ai| ai * (cols - ai)).sum();
    let second: i64 = (0..a.len())
        .flat_map(|i| (i + 1..a.len()).map(move |k| (i, k)))
        .map(|(i, k)| (a[i] - a[k]).abs())
        .sum();
    (first + second) as u64
}

/// Labels in output order: the same-row family by `(i, j, k)`, then the
/// same-column family by `(i, k, j)`.
pub fn point_labels(profile: &SIProfile) -> Vec<PointLabel> {
    let a: Vec<usize> = profile.a().iter().map(|&x| x as usize).collect();
    let last_col = profile.cols() - 1;
    let mut labels = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        for j in 0..ai {
            for k in ai..=last_col {
                labels.push(PointLabel::SameRow { i, j, k });
            }
        }
    }
    for i in 0..a.len() {
        for k in i + 1..a.len() {
            for j in a[i].min(a[k])..a[i].max(a[k]) {
                labels.push(PointLabel::SameCol { i, k, j });
            }
        }
    }
    labels
}

/// The Gorenstein point set with h-vector `profile.h()`, inside the stick
/// figure `Z_{t+1, s-t+2} * L` built from `cfg`.
///
/// Points come from the closed-form coordinates; each one is re-derived by
/// solving the linear system of its two lines and must agree.
pub fn gorenstein_points(profile: &SIProfile, cfg: &AConfig) -> Result<GorensteinResult> {
    let c1_pairs = select_c1(profile)?;
    let stick = stick_figure(cfg, profile.rows(), profile.cols())?;
    let u = stick.row_indices();
    let v = stick.col_indices();
    let labels = point_labels(profile);
    let mut points = Vec::with_capacity(labels.len());
    for label in &labels {
        let closed = match *label {
            PointLabel::SameRow { i, j, k } => meeting_point_same_row(cfg, u[i], v[j], v[k]),
            PointLabel::SameCol { i, k, j } => meeting_point_same_col(cfg, u[i], u[k], v[j]),
        };
        let [first, second] = label.cells();
        match intersect_lines(&stick, first, second)? {
            Some(p) if p == closed => {}
            other => {
                return Err(Error::Invariant(format!(
                    "point {label}: closed form {closed}, solver {other:?}"
                )))
            }
        }
        if closed.has_zero_coordinate() {
            return Err(Error::Invariant(format!(
                "point {label} = {closed} has a zero coordinate"
            )));
        }
        points.push(closed);
    }
    let total = profile.h().sum();
    if points.len() as u64 != total || expected_count(profile) != total {
        return Err(Error::Invariant(format!(
            "{} points generated, expected {total}",
            points.len()
        )));
    }
    let distinct: HashSet<&ProjPoint> = points.iter().collect();
    if distinct.len() != points.len() {
        return Err(Error::Invariant("generated points are not distinct".into()));
    }
    Ok(GorensteinResult {
        points,
        labels,
        h: profile.h().clone(),
        c1_pairs,
        stick,
    })
}
