//! The configuration `A` of four points of `P^1`, the point families `P_k`,
//! `Q_k`, the lines `L`, `l^P`, `l^Q`, the planar complete intersection `Z`,
//! and the stick figure `Z * L` with its intersections and ruling planes.
//!
//! Grid cells are addressed by position `(row, col)`; row `r` uses the index
//! value `u_r = Ia[r]` and column `c` uses `v_c = Ib[c]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{ConfigError, Error, Result};
use crate::exactq::{format_rational, QMatrix, Rational};
use crate::projgeom::{
    hadamard_point, hadamard_transform, sample_line_points, transform_line, Line3, LinearForm,
    Poly, ProjPoint,
};

/// Strictly increasing indices starting at 0 and never containing 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet(Vec<u64>);

impl IndexSet {
    pub fn new(indices: Vec<u64>) -> Result<Self, ConfigError> {
        match indices.first() {
            None => return Err(ConfigError::EmptyIndexSet),
            Some(&first) if first != 0 => return Err(ConfigError::IndexSetStart(first)),
            _ => {}
        }
        if let Some(pos) = indices.windows(2).position(|w| w[0] >= w[1]) {
            return Err(ConfigError::IndexSetOrder(pos + 1));
        }
        if indices.contains(&1) {
            return Err(ConfigError::IndexSetContainsOne);
        }
        Ok(IndexSet(indices))
    }

    /// `{0, 2, 4, ..., 2(n-1)}`.
    pub fn evens(n: usize) -> Self {
        IndexSet((0..n as u64).map(|k| 2 * k).collect())
    }

    pub fn indices(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Four points `A_i = [alpha_i : beta_i]` of `P^1` together with the index
/// sets for the `P` and `Q` families.
///
/// The representatives `(alpha_i, beta_i)` are kept exactly as given: the
/// line `L` (and everything built from it) depends on them, not only on the
/// points of `P^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AConfig {
    alpha: [Rational; 4],
    beta: [Rational; 4],
    ia: IndexSet,
    ib: IndexSet,
}

/// Whether `[alpha : beta]` is one of `[1 : -n]` or `[1 : -1/n]`, `n >= 1`.
pub fn in_w(alpha: &Rational, beta: &Rational) -> bool {
    if alpha.is_zero() {
        return false;
    }
    let r = -(beta / alpha);
    r.is_positive() && (r.denom().is_one() || r.numer().is_one())
}

/// Validates `A` and the index sets.
pub fn validate_config(
    points: [(Rational, Rational); 4],
    ia: IndexSet,
    ib: IndexSet,
) -> Result<AConfig> {
    for (i, (a, b)) in points.iter().enumerate() {
        if a.is_zero() || b.is_zero() {
            return Err(ConfigError::ZeroCoordinate(i).into());
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if &points[i].0 * &points[j].1 == &points[j].0 * &points[i].1 {
                return Err(ConfigError::NotDistinct(i, j).into());
            }
        }
    }
    for (i, (a, b)) in points.iter().enumerate() {
        if in_w(a, b) {
            return Err(ConfigError::InW {
                index: i,
                ratio: format_rational(&-(b / a)),
            }
            .into());
        }
    }
    let alpha = points.clone().map(|p| p.0);
    let beta = points.map(|p| p.1);
    let cfg = AConfig {
        alpha,
        beta,
        ia,
        ib,
    };
    for &k in cfg.ia.indices() {
        if cfg.point_p(k).has_zero_coordinate() {
            return Err(ConfigError::FamilyZero(format!("P_{k}")).into());
        }
    }
    for &k in cfg.ib.indices() {
        if cfg.point_q(k).has_zero_coordinate() {
            return Err(ConfigError::FamilyZero(format!("Q_{k}")).into());
        }
    }
    Ok(cfg)
}

impl AConfig {
    /// `A = ([1:1], [1:2], [1:3], [1:4])` with even index sets of the given sizes.
    pub fn standard(rows: usize, cols: usize) -> AConfig {
        let points = [1, 2, 3, 4].map(|b| (Rational::one(), Rational::from_integer(b.into())));
        validate_config(points, IndexSet::evens(rows), IndexSet::evens(cols))
            .expect("default configuration is valid")
    }

    pub fn alpha(&self) -> &[Rational; 4] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rational; 4] {
        &self.beta
    }

    pub fn ia(&self) -> &IndexSet {
        &self.ia
    }

    pub fn ib(&self) -> &IndexSet {
        &self.ib
    }

    /// Same points of `P^1`, new index sets.
    pub fn with_index_sets(&self, ia: IndexSet, ib: IndexSet) -> Result<AConfig> {
        let points = std::array::from_fn(|i| (self.alpha[i].clone(), self.beta[i].clone()));
        validate_config(points, ia, ib)
    }

    /// `P_k = [(alpha_t + k beta_t) / alpha_t]_t`.
    pub fn point_p(&self, k: u64) -> ProjPoint {
        let k = Rational::from_integer(k.into());
        let coords: Vec<Rational> = (0..4)
            .map(|t| (&self.alpha[t] + &k * &self.beta[t]) / &self.alpha[t])
            .collect();
        ProjPoint::new(&coords).expect("P_k is nonzero")
    }

    /// `Q_k = [(k alpha_t + beta_t) / beta_t]_t`.
    pub fn point_q(&self, k: u64) -> ProjPoint {
        let k = Rational::from_integer(k.into());
        let coords: Vec<Rational> = (0..4)
            .map(|t| (&k * &self.alpha[t] + &self.beta[t]) / &self.beta[t])
            .collect();
        ProjPoint::new(&coords).expect("Q_k is nonzero")
    }

    /// `alpha_s beta_r - alpha_r beta_s`.
    fn cross(&self, s: usize, r: usize) -> Rational {
        &self.alpha[s] * &self.beta[r] - &self.alpha[r] * &self.beta[s]
    }

    fn take_rows(&self, a: usize) -> Result<&[u64]> {
        take(&self.ia, "Ia", a)
    }

    fn take_cols(&self, b: usize) -> Result<&[u64]> {
        take(&self.ib, "Ib", b)
    }
}

fn take<'a>(set: &'a IndexSet, name: &'static str, n: usize) -> Result<&'a [u64]> {
    if n == 0 || n > set.len() {
        return Err(ConfigError::IndexSetTooShort {
            name,
            have: set.len(),
            need: n.max(1),
        }
        .into());
    }
    Ok(&set.indices()[..n])
}

impl fmt::Display for AConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = (0..4)
            .map(|i| {
                format!(
                    "[{}:{}]",
                    format_rational(&self.alpha[i]),
                    format_rational(&self.beta[i])
                )
            })
            .collect();
        write!(
            f,
            "A = ({}), Ia = {:?}, Ib = {:?}",
            pts.join(", "),
            self.ia.indices(),
            self.ib.indices()
        )
    }
}

/// `L = { sum alpha_t x_t = 0, sum beta_t x_t = 0 }`.
///
/// Also checks that `L` misses `Delta_1`: `L` meets the coordinate line
/// `x_s = x_r = 0` exactly when the minor `alpha_s beta_r - alpha_r beta_s`
/// vanishes.
pub fn line_l(cfg: &AConfig) -> Result<Line3> {
    let l = Line3::new(LinearForm::new(&cfg.alpha)?, LinearForm::new(&cfg.beta)?)?;
    for s in 0..4 {
        for r in s + 1..4 {
            if cfg.cross(s, r).is_zero() {
                return Err(Error::Invariant(format!(
                    "L meets Delta_1 on the line x_{s} = x_{r} = 0"
                )));
            }
        }
    }
    Ok(l)
}

/// The matrices `M` (rows `alpha beta`, `alpha^2`, `beta^2`) and `N` (rows
/// `alpha`, `beta`).
pub fn matrices_mn(cfg: &AConfig) -> (QMatrix, QMatrix) {
    let row = |f: &dyn Fn(usize) -> Rational| (0..4).map(f).collect::<Vec<_>>();
    let m = QMatrix::from_rows(vec![
        row(&|t| &cfg.alpha[t] * &cfg.beta[t]),
        row(&|t| &cfg.alpha[t] * &cfg.alpha[t]),
        row(&|t| &cfg.beta[t] * &cfg.beta[t]),
    ])
    .expect("3x4");
    let n = QMatrix::from_rows(vec![cfg.alpha.to_vec(), cfg.beta.to_vec()]).expect("2x4");
    (m, n)
}

/// The forms `h`, `f`, `g` from the minors of `M` and `N`:
/// `h = sum_t (-1)^(t+1) alpha_t beta_t |M(t+1)| x_t`,
/// `f = sum_{t>=1} (-1)^t alpha_t |N(1,t+1)| x_t`, and `g` likewise with `beta`.
pub fn plane_forms(cfg: &AConfig) -> Result<(LinearForm, LinearForm, LinearForm)> {
    let (m, n) = matrices_mn(cfg);
    let sign = |t: usize| {
        if t % 2 == 0 {
            -Rational::one()
        } else {
            Rational::one()
        }
    };
    let mut h = Vec::with_capacity(4);
    for t in 0..4 {
        h.push(sign(t) * &cfg.alpha[t] * &cfg.beta[t] * m.minor(&[], &[t])?);
    }
    let mut f = vec![Rational::zero()];
    let mut g = vec![Rational::zero()];
    for t in 1..4 {
        // (-1)^t = -sign(t)
        let nm = -sign(t) * n.minor(&[], &[0, t])?;
        f.push(&nm * &cfg.alpha[t]);
        g.push(nm * &cfg.beta[t]);
    }
    Ok((
        LinearForm::new(&h)?,
        LinearForm::new(&f)?,
        LinearForm::new(&g)?,
    ))
}

/// The lines `l^P = {h, f}` through the `P_k` and `l^Q = {h, g}` through the `Q_k`.
pub fn lines_pq(cfg: &AConfig) -> Result<(Line3, Line3)> {
    let (h, f, g) = plane_forms(cfg)?;
    let ell_p = Line3::new(h.clone(), f)?;
    let ell_q = Line3::new(h, g)?;
    if ell_p.same_line(&ell_q) {
        return Err(Error::Invariant("l^P and l^Q coincide".into()));
    }
    Ok((ell_p, ell_q))
}

/// `Z_{a,b} = { P_u * Q_v }` over the first `a` indices of `Ia` and first `b`
/// of `Ib`, row-major.
pub fn build_z(cfg: &AConfig, a: usize, b: usize) -> Result<Vec<ProjPoint>> {
    let rows = cfg.take_rows(a)?;
    let cols = cfg.take_cols(b)?;
    let mut points = Vec::with_capacity(a * b);
    for &u in rows {
        let p = cfg.point_p(u);
        for &v in cols {
            points.push(hadamard_point(&p, &cfg.point_q(v))?);
        }
    }
    let mut sorted = points.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invariant("Z contains a repeated point".into()));
    }
    Ok(points)
}

/// Generators of the ideal of `Z_{a,b}`: the plane `h`, the degree-`b`
/// product of the `f^(*Q_v)`, and the degree-`a` product of the `g^(*P_u)`.
pub fn z_generators(cfg: &AConfig, a: usize, b: usize) -> Result<(Poly, Poly, Poly)> {
    let rows = cfg.take_rows(a)?;
    let cols = cfg.take_cols(b)?;
    let (h, f, g) = plane_forms(cfg)?;
    let f = f.to_poly();
    let g = g.to_poly();
    let fs = cols
        .iter()
        .map(|&v| hadamard_transform(&f, &cfg.point_q(v)))
        .collect::<Result<Vec<_>>>()?;
    let gs = rows
        .iter()
        .map(|&u| hadamard_transform(&g, &cfg.point_p(u)))
        .collect::<Result<Vec<_>>>()?;
    Ok((h.to_poly(), Poly::product(&fs)?, Poly::product(&gs)?))
}

/// The `a x b` grid of lines `P_u * Q_v * L`.
#[derive(Clone, Debug)]
pub struct StickFigure {
    config: AConfig,
    rows: Vec<u64>,
    cols: Vec<u64>,
    lines: Vec<Line3>,
}

impl StickFigure {
    pub fn config(&self) -> &AConfig {
        &self.config
    }

    /// Index values `u_0, ..., u_{a-1}`.
    pub fn row_indices(&self) -> &[u64] {
        &self.rows
    }

    /// Index values `v_0, ..., v_{b-1}`.
    pub fn col_indices(&self) -> &[u64] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn line(&self, row: usize, col: usize) -> &Line3 {
        &self.lines[row * self.cols.len() + col]
    }

    /// All lines, row-major.
    pub fn lines(&self) -> &[Line3] {
        &self.lines
    }

    /// `(row, col)` for every cell, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nrows()).flat_map(move |r| (0..self.ncols()).map(move |c| (r, c)))
    }
}

/// Builds `Z_{a,b} * L` and checks that its `ab` lines are distinct.
pub fn stick_figure(cfg: &AConfig, a: usize, b: usize) -> Result<StickFigure> {
    let rows = cfg.take_rows(a)?.to_vec();
    let cols = cfg.take_cols(b)?.to_vec();
    let l = line_l(cfg)?;
    let mut lines = Vec::with_capacity(a * b);
    for &u in &rows {
        let p = cfg.point_p(u);
        for &v in &cols {
            let pq = hadamard_point(&p, &cfg.point_q(v))?;
            lines.push(transform_line(&l, &pq)?);
        }
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].same_line(&lines[j]) {
                return Err(Error::Invariant(format!(
                    "stick-figure lines {} and {} coincide",
                    i, j
                )));
            }
        }
    }
    Ok(StickFigure {
        config: cfg.clone(),
        rows,
        cols,
        lines,
    })
}

/// Coordinate `t` of the closed-form meeting point: a signed product of
/// `(alpha_t + k beta_t)` over `p_factors` and `(k alpha_t + beta_t)` over
/// `q_factors`, divided by `alpha_t beta_t` times the three cross terms
/// involving `t`.
fn closed_form(cfg: &AConfig, p_factors: [u64; 2], q_factors: [u64; 2], two_p: bool) -> ProjPoint {
    let coords: Vec<Rational> = (0..4)
        .map(|t| {
            let (al, be) = (&cfg.alpha[t], &cfg.beta[t]);
            let pf = |k: u64| al + Rational::from_integer(BigInt::from(k)) * be;
            let qf = |k: u64| Rational::from_integer(BigInt::from(k)) * al + be;
            let num = if two_p {
                pf(p_factors[0]) * pf(p_factors[1]) * qf(q_factors[0])
            } else {
                pf(p_factors[0]) * qf(q_factors[0]) * qf(q_factors[1])
            };
            let mut den = al * be;
            for s in (0..4).filter(|&s| s != t) {
                den *= if s < t {
                    cfg.cross(s, t)
                } else {
                    cfg.cross(t, s)
                };
            }
            let v = num / den;
            if t % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .collect();
    ProjPoint::new(&coords).expect("closed-form coordinates are nonzero")
}

/// Meeting point of `P_i * Q_j * L` and `P_i * Q_l * L` (same row, `j != l`).
pub fn meeting_point_same_row(cfg: &AConfig, i: u64, j: u64, l: u64) -> ProjPoint {
    closed_form(cfg, [i, 0], [j, l], false)
}

/// Meeting point of `P_i * Q_j * L` and `P_k * Q_j * L` (same column, `i != k`).
pub fn meeting_point_same_col(cfg: &AConfig, i: u64, k: u64, j: u64) -> ProjPoint {
    closed_form(cfg, [i, k], [j, 0], true)
}

/// Coefficient matrix of the two lines `P_i * Q_j * L` and `P_k * Q_l * L`,
/// each written with the forms
/// `sum alpha_t^2 beta_t / ((alpha_t + i beta_t)(j alpha_t + beta_t)) x_t` and
/// `sum alpha_t beta_t^2 / (...) x_t`. Arguments are index values.
pub fn system_matrix(cfg: &AConfig, (i, j): (u64, u64), (k, l): (u64, u64)) -> QMatrix {
    let rows_for = |p: u64, q: u64| {
        let mut first = Vec::with_capacity(4);
        let mut second = Vec::with_capacity(4);
        for t in 0..4 {
            let (al, be) = (&cfg.alpha[t], &cfg.beta[t]);
            let den = (al + Rational::from_integer(p.into()) * be)
                * (Rational::from_integer(q.into()) * al + be);
            first.push(al * al * be / &den);
            second.push(al * be * be / den);
        }
        [first, second]
    };
    let [r0, r1] = rows_for(i, j);
    let [r2, r3] = rows_for(k, l);
    QMatrix::from_rows(vec![r0, r1, r2, r3]).expect("4x4")
}

/// Closed-form determinant of [`system_matrix`]:
/// `prod(alpha_t beta_t) prod_{s<r}(alpha_s beta_r - alpha_r beta_s)
///  (i-k)(j-l)(jk-1)(il-1) / prod_t (alpha_t+i beta_t)(alpha_t+k beta_t)(j alpha_t+beta_t)(l alpha_t+beta_t)`.
pub fn system_det_closed_form(cfg: &AConfig, (i, j): (u64, u64), (k, l): (u64, u64)) -> Rational {
    let z = |v: u64| Rational::from_integer(BigInt::from(v));
    let (i, j, k, l) = (z(i), z(j), z(k), z(l));
    let one = Rational::one();
    let mut num = (&i - &k) * (&j - &l) * (&j * &k - &one) * (&i * &l - &one);
    let mut den = Rational::one();
    for t in 0..4 {
        let (al, be) = (&cfg.alpha[t], &cfg.beta[t]);
        num *= al * be;
        den *= (al + &i * be) * (al + &k * be) * (&j * al + be) * (&l * al + be);
    }
    for s in 0..4 {
        for r in s + 1..4 {
            num *= cfg.cross(s, r);
        }
    }
    num / den
}

/// Intersection of two grid lines, addressed by position.
///
/// Lines sharing exactly one of row/column meet in one point, given by the
/// closed form and confirmed against the kernel of [`system_matrix`]. Lines
/// sharing neither are skew; their system determinant must be nonzero and
/// equal [`system_det_closed_form`]. Any disagreement is an invariant error.
pub fn intersect_lines(
    sf: &StickFigure,
    first: (usize, usize),
    second: (usize, usize),
) -> Result<Option<ProjPoint>> {
    if first == second {
        return Err(Error::Degenerate(format!(
            "intersection of line {first:?} with itself"
        )));
    }
    for &(r, c) in &[first, second] {
        if r >= sf.nrows() || c >= sf.ncols() {
            return Err(Error::Dimension(format!(
                "cell ({r}, {c}) outside the {}x{} grid",
                sf.nrows(),
                sf.ncols()
            )));
        }
    }
    let cfg = &sf.config;
    let (i, j) = (sf.rows[first.0], sf.cols[first.1]);
    let (k, l) = (sf.rows[second.0], sf.cols[second.1]);
    let system = system_matrix(cfg, (i, j), (k, l));
    if i != k && j != l {
        let det = system.det()?;
        let expected = system_det_closed_form(cfg, (i, j), (k, l));
        if det.is_zero() || det != expected {
            return Err(Error::Invariant(format!(
                "lines {first:?}, {second:?}: determinant {} but closed form {}",
                format_rational(&det),
                format_rational(&expected)
            )));
        }
        return Ok(None);
    }
    let kernel = system.kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::Invariant(format!(
            "lines {first:?}, {second:?}: system has rank {}, expected 3",
            4 - kernel.len()
        )));
    }
    let solved = ProjPoint::new(&kernel[0])?;
    let closed = if i == k {
        meeting_point_same_row(cfg, i, j, l)
    } else {
        meeting_point_same_col(cfg, i, k, j)
    };
    if solved != closed {
        return Err(Error::Invariant(format!(
            "lines {first:?}, {second:?}: kernel gives {solved}, closed form gives {closed}"
        )));
    }
    Ok(Some(closed))
}

/// One plane per row containing that row's lines, and one per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulingPlanes {
    pub row_planes: Vec<LinearForm>,
    pub col_planes: Vec<LinearForm>,
}

impl RulingPlanes {
    /// The two complete-intersection surfaces: products of the row planes and
    /// of the column planes.
    pub fn surfaces(&self) -> Result<(Poly, Poly)> {
        let rows: Vec<Poly> = self.row_planes.iter().map(LinearForm::to_poly).collect();
        let cols: Vec<Poly> = self.col_planes.iter().map(LinearForm::to_poly).collect();
        Ok((Poly::product(&rows)?, Poly::product(&cols)?))
    }
}

/// Plane through a family of lines, from two sample points per line. A
/// single line lies on a pencil of planes; then the first kernel form in
/// sorted order is returned (a choice, not a canonical plane).
fn common_plane<'a>(lines: impl Iterator<Item = &'a Line3>, what: &str) -> Result<LinearForm> {
    let rows: Vec<Vec<Rational>> = lines
        .flat_map(|l| sample_line_points(l, 2))
        .map(|p| p.to_rationals())
        .collect();
    let kernel = QMatrix::from_rows(rows)?.kernel_basis();
    let mut forms = kernel
        .iter()
        .map(|v| LinearForm::new(v))
        .collect::<Result<Vec<_>>>()?;
    forms.sort();
    forms
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invariant(format!("lines of {what} are not coplanar")))
}

pub fn ruling_planes(sf: &StickFigure) -> Result<RulingPlanes> {
    let row_planes = (0..sf.nrows())
        .map(|r| common_plane((0..sf.ncols()).map(|c| sf.line(r, c)), &format!("row {r}")))
        .collect::<Result<_>>()?;
    let col_planes = (0..sf.ncols())
        .map(|c| {
            common_plane(
                (0..sf.nrows()).map(|r| sf.line(r, c)),
                &format!("column {c}"),
            )
        })
        .collect::<Result<_>>()?;
    Ok(RulingPlanes {
        row_planes,
        col_planes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{rat, ratio};
    use crate::projgeom::{eval_poly, hadamard_transform};

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::from_ints(c).unwrap()
    }

    fn cfg_from(pairs: [(i64, i64); 4], ia: Vec<u64>, ib: Vec<u64>) -> Result<AConfig> {
        validate_config(
            pairs.map(|(a, b)| (rat(a), rat(b))),
            IndexSet::new(ia)?,
            IndexSet::new(ib)?,
        )
    }

    #[test]
    fn index_set_rules() {
        assert!(IndexSet::new(vec![0, 2, 4]).is_ok());
        assert_eq!(IndexSet::new(vec![]), Err(ConfigError::EmptyIndexSet));
        assert_eq!(
            IndexSet::new(vec![2, 4]),
            Err(ConfigError::IndexSetStart(2))
        );
        assert_eq!(
            IndexSet::new(vec![0, 4, 3]),
            Err(ConfigError::IndexSetOrder(2))
        );
        assert_eq!(
            IndexSet::new(vec![0, 1, 2, 3]),
            Err(ConfigError::IndexSetContainsOne)
        );
        assert_eq!(IndexSet::evens(3).indices(), &[0, 2, 4]);
    }

    #[test]
    fn default_config_is_accepted() {
        let cfg = cfg_from(
            [(1, 1), (1, 2), (1, 3), (1, 4)],
            vec![0, 2, 4],
            vec![0, 2, 4, 6],
        );
        assert!(cfg.is_ok());
    }

    #[test]
    fn w_membership_rejected() {
        let err = cfg_from([(1, 1), (1, -2), (1, 3), (1, 4)], vec![0], vec![0]).unwrap_err();
        assert!(matches!(
            err,
            Error::Config(ConfigError::InW { index: 1, .. })
        ));
        let err = validate_config(
            [
                (rat(1), rat(1)),
                (rat(2), rat(-1)),
                (rat(1), rat(3)),
                (rat(1), rat(4)),
            ],
            IndexSet::evens(1),
            IndexSet::evens(1),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::Config(ConfigError::InW { index: 1, .. })
        ));
        // -beta/alpha = 2/3 is neither n nor 1/n.
        assert!(!in_w(&rat(3), &rat(-2)));
        assert!(in_w(&rat(3), &rat(-3)));
    }

    #[test]
    fn distinctness_and_zero_rejected() {
        let err = cfg_from([(1, 1), (1, 1), (1, 3), (1, 4)], vec![0], vec![0]).unwrap_err();
        assert_eq!(err, Error::Config(ConfigError::NotDistinct(0, 1)));
        let err = cfg_from([(1, 1), (2, 4), (1, 2), (1, 4)], vec![0], vec![0]).unwrap_err();
        assert_eq!(err, Error::Config(ConfigError::NotDistinct(1, 2)));
        let err = cfg_from([(1, 0), (1, 2), (1, 3), (1, 4)], vec![0], vec![0]).unwrap_err();
        assert_eq!(err, Error::Config(ConfigError::ZeroCoordinate(0)));
    }

    #[test]
    fn line_l_default() {
        let cfg = AConfig::standard(3, 4);
        let l = line_l(&cfg).unwrap();
        assert_eq!(l.form_a(), &form(&[1, 1, 1, 1]));
        assert_eq!(l.form_b(), &form(&[1, 2, 3, 4]));
        for p in sample_line_points(&l, 8) {
            assert!(crate::projgeom::delta_index(&p) > 1);
        }
    }

    #[test]
    fn families_match_worked_example() {
        let cfg = AConfig::standard(3, 4);
        assert_eq!(cfg.point_p(0), ProjPoint::ones(3));
        assert_eq!(cfg.point_q(0), ProjPoint::ones(3));
        assert_eq!(cfg.point_p(1), pt(&[2, 3, 4, 5]));
        assert_eq!(cfg.point_p(2), pt(&[3, 5, 7, 9]));
        assert_eq!(cfg.point_p(3), pt(&[4, 7, 10, 13]));
        assert_eq!(cfg.point_p(4), pt(&[5, 9, 13, 17]));
        assert_eq!(
            cfg.point_q(1),
            ProjPoint::new(&[rat(2), ratio(3, 2), ratio(4, 3), ratio(5, 4)]).unwrap()
        );
        assert_eq!(cfg.point_q(2), pt(&[18, 12, 10, 9]));
        assert_eq!(
            cfg.point_q(3),
            ProjPoint::new(&[rat(4), ratio(5, 2), rat(2), ratio(7, 4)]).unwrap()
        );
    }

    #[test]
    fn matrices_match_worked_example() {
        let (m, n) = matrices_mn(&AConfig::standard(1, 1));
        let expected = [-2, -6, -6, -2];
        for (c, e) in expected.iter().enumerate() {
            assert_eq!(m.minor(&[], &[c]).unwrap(), rat(*e));
        }
        assert_eq!(n.minor(&[], &[0, 1]).unwrap(), rat(1));
        assert_eq!(n.minor(&[], &[0, 2]).unwrap(), rat(2));
        assert_eq!(n.minor(&[], &[0, 3]).unwrap(), rat(1));
    }

    #[test]
    fn lines_pq_default() {
        let cfg = AConfig::standard(1, 1);
        let (ell_p, ell_q) = lines_pq(&cfg).unwrap();
        assert_eq!(ell_p.form_a(), &form(&[2, -12, 18, -8]));
        assert_eq!(ell_p.form_b(), &form(&[0, -1, 2, -1]));
        assert_eq!(ell_q.form_a(), ell_p.form_a());
        assert_eq!(ell_q.form_b(), &form(&[0, -2, 6, -4]));
        for k in 0..=10 {
            assert!(ell_p.contains(&cfg.point_p(k)), "P_{k}");
            assert!(ell_q.contains(&cfg.point_q(k)), "Q_{k}");
        }
        assert!(!ell_p.same_line(&ell_q));
    }

    #[test]
    fn z_small_cases() {
        let cfg = AConfig::standard(3, 4);
        assert_eq!(build_z(&cfg, 1, 1).unwrap(), vec![ProjPoint::ones(3)]);
        let z = build_z(&cfg, 3, 4).unwrap();
        assert_eq!(z.len(), 12);
        let m = QMatrix::from_rows(z.iter().map(ProjPoint::to_rationals).collect()).unwrap();
        assert_eq!(m.rank(), 3);
        assert!(build_z(&cfg, 4, 1).is_err());
        assert!(build_z(&cfg, 0, 1).is_err());
    }

    #[test]
    fn z_generators_vanish() {
        let cfg = AConfig::standard(3, 4);
        let (h, f, g) = z_generators(&cfg, 1, 1).unwrap();
        let (h0, f0, g0) = plane_forms(&cfg).unwrap();
        assert_eq!((h, f, g), (h0.to_poly(), f0.to_poly(), g0.to_poly()));
        let (h, f, g) = z_generators(&cfg, 2, 2).unwrap();
        assert_eq!((h.degree(), f.degree(), g.degree()), (1, 2, 2));
        for p in build_z(&cfg, 2, 2).unwrap() {
            for gen in [&h, &f, &g] {
                assert!(eval_poly(gen, &p).is_zero());
            }
        }
        let (_, f, g) = z_generators(&cfg, 3, 4).unwrap();
        assert_eq!((f.degree(), g.degree()), (4, 3));
    }

    #[test]
    fn transformed_sum_of_coordinates_matches_displayed_coefficients() {
        // f = x0+x1+x2+x3 is the first form of L for the default A; transforming
        // by P_2 * Q_2 must give alpha_t^2 beta_t / ((alpha_t + 2 beta_t)(2 alpha_t + beta_t)).
        let cfg = AConfig::standard(2, 2);
        let pq = hadamard_point(&cfg.point_p(2), &cfg.point_q(2)).unwrap();
        let f = Poly::linear(&[rat(1), rat(1), rat(1), rat(1)]);
        let got = LinearForm::new(
            &hadamard_transform(&f, &pq)
                .unwrap()
                .terms()
                .map(|(_, c)| c.clone())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let expected: Vec<Rational> = (1..=4).map(|b| ratio(b, (1 + 2 * b) * (2 + b))).collect();
        assert_eq!(got, LinearForm::new(&expected).unwrap());
        let m = system_matrix(&cfg, (2, 2), (2, 2));
        assert_eq!(LinearForm::new(m.row(0)).unwrap(), got);
    }

    #[test]
    fn single_cell_stick_is_l() {
        let cfg = AConfig::standard(1, 1);
        let sf = stick_figure(&cfg, 1, 1).unwrap();
        assert_eq!(sf.lines(), &[line_l(&cfg).unwrap()]);
        let planes = ruling_planes(&sf).unwrap();
        assert_eq!(planes.row_planes.len(), 1);
        assert!(sample_line_points(sf.line(0, 0), 3)
            .iter()
            .all(|p| planes.row_planes[0].vanishes_at(p)));
    }

    #[test]
    fn stick_3x4_default() {
        let cfg = AConfig::standard(3, 4);
        let sf = stick_figure(&cfg, 3, 4).unwrap();
        assert_eq!(sf.lines().len(), 12);
        let cells: Vec<_> = sf.cells().collect();
        for (x, &a) in cells.iter().enumerate() {
            for &b in &cells[x + 1..] {
                let meet = intersect_lines(&sf, a, b).unwrap();
                assert_eq!(meet.is_some(), (a.0 == b.0) != (a.1 == b.1), "{a:?} {b:?}");
                let geometric = sf.line(a.0, a.1).meet(sf.line(b.0, b.1));
                match (&meet, geometric) {
                    (Some(p), crate::projgeom::LineMeet::Point(q)) => assert_eq!(p, &q),
                    (None, crate::projgeom::LineMeet::Skew) => {}
                    other => panic!("{a:?} {b:?}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn worked_intersections() {
        let cfg = AConfig::standard(3, 4);
        let sf = stick_figure(&cfg, 3, 4).unwrap();
        // Index values (0,0) and (0,2) are positions (0,0) and (0,1).
        let p = intersect_lines(&sf, (0, 0), (0, 1)).unwrap().unwrap();
        assert_eq!(
            p,
            ProjPoint::new(&[ratio(-1, 2), rat(2), ratio(-5, 2), rat(1)]).unwrap()
        );
        // Index values (0,2) and (2,2): the point [-3/2 : 5 : -35/6 : 9/4].
        let p = intersect_lines(&sf, (0, 1), (1, 1)).unwrap().unwrap();
        assert_eq!(p, pt(&[-18, 60, -70, 27]));
        // Index values (0,0) and (2,0): same column, j = 0.
        let p = intersect_lines(&sf, (0, 0), (1, 0)).unwrap().unwrap();
        assert_eq!(p, meeting_point_same_col(&cfg, 0, 2, 0));
        assert_eq!(intersect_lines(&sf, (0, 0), (1, 1)).unwrap(), None);
        assert!(matches!(
            intersect_lines(&sf, (1, 1), (1, 1)),
            Err(Error::Degenerate(_))
        ));
        assert!(intersect_lines(&sf, (0, 0), (3, 0)).is_err());
    }

    #[test]
    fn system_rank_three_on_shared_row() {
        let cfg = AConfig::standard(3, 4);
        let m = system_matrix(&cfg, (2, 0), (2, 4));
        assert_eq!(m.rank(), 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(
            ProjPoint::new(&k[0]).unwrap(),
            meeting_point_same_row(&cfg, 2, 0, 4)
        );
    }

    #[test]
    fn system_det_closed_form_matches() {
        let cfg = AConfig::standard(3, 4);
        for (i, j, k, l) in [
            (0, 0, 2, 2),
            (2, 4, 4, 6),
            (0, 6, 4, 2),
            (2, 0, 2, 4),
            (4, 2, 0, 2),
        ] {
            let m = system_matrix(&cfg, (i, j), (k, l));
            assert_eq!(
                m.det().unwrap(),
                system_det_closed_form(&cfg, (i, j), (k, l))
            );
        }
    }

    #[test]
    fn ruling_planes_default() {
        let cfg = AConfig::standard(3, 4);
        let sf = stick_figure(&cfg, 3, 4).unwrap();
        let planes = ruling_planes(&sf).unwrap();
        assert_eq!(planes.row_planes.len(), 3);
        assert_eq!(planes.col_planes.len(), 4);
        let (f1, f2) = planes.surfaces().unwrap();
        assert_eq!((f1.degree(), f2.degree()), (3, 4));
        for (r, c) in sf.cells() {
            for p in sample_line_points(sf.line(r, c), 3) {
                assert!(planes.row_planes[r].vanishes_at(&p));
                assert!(planes.col_planes[c].vanishes_at(&p));
                assert!(eval_poly(&f1, &p).is_zero());
                assert!(eval_poly(&f2, &p).is_zero());
            }
        }
    }

    #[test]
    fn collinearity_of_families() {
        let cfg = cfg_from([(2, 3), (1, 5), (3, 1), (4, 7)], vec![0], vec![0]).unwrap();
        for k in 2..=10 {
            for pts in [
                [cfg.point_p(0), cfg.point_p(1), cfg.point_p(k)],
                [cfg.point_q(0), cfg.point_q(1), cfg.point_q(k)],
            ] {
                let m =
                    QMatrix::from_rows(pts.iter().map(ProjPoint::to_rationals).collect()).unwrap();
                assert_eq!(m.rank(), 2);
            }
        }
        for i in 1..=6 {
            for j in 1..=6 {
                assert_ne!(cfg.point_p(i), cfg.point_q(j));
            }
        }
    }
}
