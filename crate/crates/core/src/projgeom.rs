//! Projective points, hyperplanes and lines with exact coordinates, plus the
//! Hadamard (coordinate-wise) product and the Hadamard transformation of
//! polynomials.
//!
//! Points and linear forms are stored in a canonical integer representative:
//! denominators cleared, coprime entries, first nonzero entry positive. Two
//! objects are projectively equal exactly when their stored vectors are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exactq::{primitive_integer_vector, QMatrix, Rational};

fn to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

fn write_vector(f: &mut fmt::Formatter<'_>, v: &[BigInt]) -> fmt::Result {
    write!(f, "[")?;
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ":")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

/// A point of `P^n` in canonical integer form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    /// Canonicalizes a homogeneous coordinate vector. Errors if every
    /// coordinate is zero.
    pub fn new(coords: &[Rational]) -> Result<Self> {
        primitive_integer_vector(coords)
            .map(|coords| ProjPoint { coords })
            .ok_or(Error::ZeroVector)
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            &coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_bigints(coords: Vec<BigInt>) -> Result<Self> {
        Self::new(&to_rationals(&coords))
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        to_rationals(&self.coords)
    }

    /// Ambient dimension `n` (one less than the number of coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.coords.iter().any(Zero::is_zero)
    }

    /// `[1:1:...:1]`, the identity for the Hadamard product.
    pub fn ones(n: usize) -> Self {
        ProjPoint {
            coords: vec![BigInt::one(); n + 1],
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vector(f, &self.coords)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vector(f, &self.coords)
    }
}

/// A linear form `sum c_i x_i`, canonical up to a nonzero scalar.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn new(coeffs: &[Rational]) -> Result<Self> {
        primitive_integer_vector(coeffs)
            .map(|coeffs| LinearForm { coeffs })
            .ok_or(Error::ZeroVector)
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(
            &coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        to_rationals(&self.coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// Value at the canonical representative of `p`.
    pub fn eval(&self, p: &ProjPoint) -> BigInt {
        self.coeffs
            .iter()
            .zip(p.coords())
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// `sum (c_i / p_i) x_i`; needs `p` without zero coordinates.
    pub fn hadamard_transform(&self, p: &ProjPoint) -> Result<LinearForm> {
        check_dims(self.nvars(), p)?;
        if p.has_zero_coordinate() {
            return Err(Error::ZeroCoordinate(p.to_string()));
        }
        let coeffs: Vec<Rational> = self
            .coeffs
            .iter()
            .zip(p.coords())
            .map(|(c, pi)| Rational::new(c.clone(), pi.clone()))
            .collect();
        LinearForm::new(&coeffs)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::linear(&self.to_rationals())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForm({self})")
    }
}

fn check_dims(nvars: usize, p: &ProjPoint) -> Result<()> {
    if p.coords().len() != nvars {
        return Err(Error::Dimension(format!(
            "{nvars} variables against a point with {} coordinates",
            p.coords().len()
        )));
    }
    Ok(())
}

/// How two lines of `P^3` sit relative to each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineMeet {
    Same,
    Point(ProjPoint),
    Skew,
}

/// A line in `P^3` cut out by two independent linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line3 {
    form_a: LinearForm,
    form_b: LinearForm,
}

impl Line3 {
    pub fn new(form_a: LinearForm, form_b: LinearForm) -> Result<Self> {
        if form_a.nvars() != 4 || form_b.nvars() != 4 {
            return Err(Error::Dimension(
                "a line of P^3 needs forms in 4 variables".into(),
            ));
        }
        let m = QMatrix::from_rows(vec![form_a.to_rationals(), form_b.to_rationals()])?;
        if m.rank() != 2 {
            return Err(Error::Degenerate(format!(
                "forms {form_a} and {form_b} are dependent"
            )));
        }
        Ok(Line3 { form_a, form_b })
    }

    pub fn form_a(&self) -> &LinearForm {
        &self.form_a
    }

    pub fn form_b(&self) -> &LinearForm {
        &self.form_b
    }

    pub fn forms(&self) -> [&LinearForm; 2] {
        [&self.form_a, &self.form_b]
    }

    pub fn coefficient_matrix(&self) -> QMatrix {
        QMatrix::from_rows(vec![self.form_a.to_rationals(), self.form_b.to_rationals()])
            .expect("both forms have 4 coefficients")
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.coords().len() == 4 && self.form_a.vanishes_at(p) && self.form_b.vanishes_at(p)
    }

    /// Two points spanning the line (a kernel basis of the coefficient matrix).
    pub fn spanning_points(&self) -> (ProjPoint, ProjPoint) {
        let k = self.coefficient_matrix().kernel_basis();
        debug_assert_eq!(k.len(), 2);
        (
            ProjPoint::new(&k[0]).expect("kernel vectors are nonzero"),
            ProjPoint::new(&k[1]).expect("kernel vectors are nonzero"),
        )
    }

    /// Stacked `4 x 4` system of both lines' forms.
    pub fn system_with(&self, other: &Line3) -> QMatrix {
        QMatrix::from_rows(vec![
            self.form_a.to_rationals(),
            self.form_b.to_rationals(),
            other.form_a.to_rationals(),
            other.form_b.to_rationals(),
        ])
        .expect("four forms of length 4")
    }

    pub fn meet(&self, other: &Line3) -> LineMeet {
        let system = self.system_with(other);
        match system.rank() {
            2 => LineMeet::Same,
            3 => {
                let k = system.kernel_basis();
                LineMeet::Point(ProjPoint::new(&k[0]).expect("kernel vectors are nonzero"))
            }
            _ => LineMeet::Skew,
        }
    }

    pub fn same_line(&self, other: &Line3) -> bool {
        self.meet(other) == LineMeet::Same
    }
}

impl fmt::Display for Line3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} = 0, {} = 0}}", self.form_a, self.form_b)
    }
}

/// A homogeneous polynomial with rational coefficients.
///
/// Terms are keyed by dense exponent vectors; iteration and printing follow
/// lexicographic order with `x0 > x1 > ...` (so `x0^d` comes first).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    /// Builds a polynomial, merging repeated exponent vectors and dropping
    /// zero coefficients. Every exponent vector must have `nvars` entries
    /// summing to `degree`.
    pub fn new(nvars: usize, degree: u32, terms: Vec<(Vec<u32>, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector {exp:?} for {nvars} variables"
                )));
            }
            if exp.iter().sum::<u32>() != degree {
                return Err(Error::Dimension(format!(
                    "exponent vector {exp:?} is not of degree {degree}"
                )));
            }
            *map.entry(exp).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Poly {
            nvars,
            degree,
            terms: map,
        })
    }

    pub fn linear(coeffs: &[Rational]) -> Poly {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            })
            .collect();
        Poly {
            nvars: n,
            degree: 1,
            terms,
        }
    }

    pub fn one(nvars: usize) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], Rational::one());
        Poly {
            nvars,
            degree: 0,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(
                "product of polynomials in different rings".into(),
            ));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                terms.push((e, c1 * c2));
            }
        }
        Poly::new(self.nvars, self.degree + other.degree, terms)
    }

    /// Product of a nonempty list of polynomials.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        let mut it = factors.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Degenerate("empty product".into()))?;
        it.try_fold(first.clone(), |acc, f| acc.mul(f))
    }

    /// Scales so that the coefficients are coprime integers with a positive
    /// leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> Poly {
        let coeffs: Vec<Rational> = self.terms().map(|(_, c)| c.clone()).collect();
        let Some(ints) = primitive_integer_vector(&coeffs) else {
            return self.clone();
        };
        let terms = self
            .terms()
            .zip(ints)
            .map(|((e, _), c)| (e.to_vec(), Rational::from_integer(c)))
            .collect();
        Poly {
            nvars: self.nvars,
            degree: self.degree,
            terms,
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{e}")
                    }
                })
                .collect();
            let coeff = crate::exactq::format_rational(&abs);
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Coordinate-wise product `p * q`.
pub fn hadamard_point(p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    if p.coords().len() != q.coords().len() {
        return Err(Error::Dimension(format!(
            "Hadamard product of points in P^{} and P^{}",
            p.dim(),
            q.dim()
        )));
    }
    let prod: Vec<BigInt> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| a * b)
        .collect();
    if prod.iter().all(Zero::is_zero) {
        return Err(Error::UndefinedHadamard);
    }
    ProjPoint::from_bigints(prod)
}

/// Least `i` with `p` in `Delta_i`: number of nonzero coordinates minus one.
pub fn delta_index(p: &ProjPoint) -> usize {
    p.coords().iter().filter(|c| !c.is_zero()).count() - 1
}

/// Hadamard transformation `sum alpha_I X^I -> sum (alpha_I / P^I) X^I`,
/// using the canonical integer representative of `p`.
pub fn hadamard_transform(f: &Poly, p: &ProjPoint) -> Result<Poly> {
    check_dims(f.nvars(), p)?;
    if p.has_zero_coordinate() {
        return Err(Error::ZeroCoordinate(p.to_string()));
    }
    let terms = f
        .terms()
        .map(|(exp, c)| {
            let mono = exp
                .iter()
                .zip(p.coords())
                .fold(BigInt::one(), |acc, (&e, pi)| acc * Pow::pow(pi, e));
            (exp.to_vec(), c / Rational::from_integer(mono))
        })
        .collect();
    Poly::new(f.nvars(), f.degree(), terms)
}

/// The line `p * l`: both defining forms Hadamard-transformed by `p`.
pub fn transform_line(l: &Line3, p: &ProjPoint) -> Result<Line3> {
    Line3::new(
        l.form_a().hadamard_transform(p)?,
        l.form_b().hadamard_transform(p)?,
    )
}

/// Value of `f` at the canonical representative of `p`.
pub fn eval_poly(f: &Poly, p: &ProjPoint) -> Rational {
    f.terms().fold(Rational::zero(), |acc, (exp, c)| {
        let mono = exp
            .iter()
            .zip(p.coords())
            .fold(BigInt::one(), |m, (&e, pi)| m * Pow::pow(pi, e));
        acc + c * Rational::from_integer(mono)
    })
}

/// The line through two distinct points of `P^3`. The two forms come from
/// the kernel of the `2 x 4` coordinate matrix, canonicalized and sorted.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<Line3> {
    if p.coords().len() != 4 || q.coords().len() != 4 {
        return Err(Error::Dimension("line_through needs points of P^3".into()));
    }
    if p == q {
        return Err(Error::Degenerate(format!("line through {p} and itself")));
    }
    let m = QMatrix::from_rows(vec![p.to_rationals(), q.to_rationals()])?;
    let mut forms: Vec<LinearForm> = m
        .kernel_basis()
        .iter()
        .map(|v| LinearForm::new(v))
        .collect::<Result<_>>()?;
    forms.sort();
    let b = forms
        .pop()
        .expect("kernel of rank-2 2x4 matrix has dimension 2");
    let a = forms
        .pop()
        .expect("kernel of rank-2 2x4 matrix has dimension 2");
    Line3::new(a, b)
}

/// Fixed enumeration of distinct points of `P^1`:
/// `(1:0), (0:1), (1:1), (1:2), (2:1), (1:3), (3:1), (1:4), (2:3), ...`.
pub fn p1_parameters() -> impl Iterator<Item = (u64, u64)> {
    let head = [(1, 0), (0, 1)].into_iter();
    let tail = (2u64..).flat_map(|sum| {
        (1..sum)
            .map(move |l| (l, sum - l))
            .filter(|(l, m)| l.gcd(m) == 1)
    });
    head.chain(tail)
}

/// `k` distinct points `lambda u + mu v` on `l`, where `u, v` span the line.
pub fn sample_line_points(l: &Line3, k: usize) -> Vec<ProjPoint> {
    let (u, v) = l.spanning_points();
    let u = u.to_rationals();
    let v = v.to_rationals();
    p1_parameters()
        .take(k)
        .map(|(lambda, mu)| {
            let lambda = Rational::from_integer(lambda.into());
            let mu = Rational::from_integer(mu.into());
            let coords: Vec<Rational> = u
                .iter()
                .zip(&v)
                .map(|(a, b)| a * &lambda + b * &mu)
                .collect();
            ProjPoint::new(&coords).expect("u and v are independent")
        })
        .collect()
}
