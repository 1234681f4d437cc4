//! h-vectors: binomial expansions, Macaulay bounds, O- and SI-sequence tests,
//! and the sequences `a`, `g`, `b` attached to an SI-sequence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, HVectorError, Result};

/// `C(n, k)` as `u128`; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, j| acc * u128::from(n - j) / u128::from(j + 1))
}

/// The `i`-binomial expansion of `n`: the unique strictly decreasing list
/// `n_i > n_{i-1} > ... > n_j >= j >= 1` with `n = sum C(n_k, k)`.
///
/// Entry `m` of the result pairs with `k = i - m`. Computed greedily; empty
/// for `n = 0`.
pub fn binomial_expansion(n: u64, i: u64) -> Vec<u64> {
    assert!(i >= 1, "binomial expansion needs i >= 1");
    let mut rest = u128::from(n);
    let mut k = i;
    let mut out = Vec::new();
    while rest > 0 {
        debug_assert!(k >= 1);
        // Largest m with C(m, k) <= rest; C(k, k) = 1 so m >= k.
        let mut m = k;
        while binomial(m + 1, k) <= rest {
            m += 1;
        }
        rest -= binomial(m, k);
        out.push(m);
        k -= 1;
    }
    out
}

/// Macaulay's bound `n^<i>`: the largest possible value of `h_{i+1}` for a
/// standard graded algebra with `h_i = n`.
pub fn macaulay_bound(n: u64, i: u64) -> u64 {
    binomial_expansion(n, i)
        .iter()
        .enumerate()
        .map(|(m, &nk)| {
            let k = i - m as u64;
            u64::try_from(binomial(nk + 1, k + 1)).expect("Macaulay bound overflows u64")
        })
        .sum()
}

/// First position where `seq` fails to be an O-sequence, with the offending
/// value and bound.
fn o_sequence_violation(seq: &[i64]) -> Option<(usize, i64, u64)> {
    if seq.is_empty() {
        return None;
    }
    if seq[0] != 1 {
        return Some((0, seq[0], 1));
    }
    if let Some(i) = seq.iter().position(|&v| v < 0) {
        return Some((i, seq[i], 0));
    }
    // The growth condition starts at i = 1; h_1 is free.
    for i in 1..seq.len().saturating_sub(1) {
        let bound = macaulay_bound(seq[i] as u64, i as u64);
        if seq[i + 1] as u64 > bound {
            return Some((i + 1, seq[i + 1], bound));
        }
    }
    None
}

/// `true` iff `seq` is empty, or starts with 1, is nonnegative, and obeys
/// `seq[i+1] <= macaulay_bound(seq[i], i)` for all `i >= 1`.
pub fn is_o_sequence(seq: &[i64]) -> bool {
    o_sequence_violation(seq).is_none()
}

/// A finite sequence of nonnegative integers `h_0, ..., h_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(entries: Vec<u64>) -> Self {
        HVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `h_{i} - h_{i-1}` for `i = 0..=s+1`, with `h_{-1} = h_{s+1} = 0`.
    pub fn first_difference(&self) -> Vec<i64> {
        let h: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        (0..=h.len())
            .map(|i| {
                let cur = h.get(i).copied().unwrap_or(0);
                let prev = if i == 0 { 0 } else { h[i - 1] };
                cur - prev
            })
            .collect()
    }
}

impl From<Vec<u64>> for HVector {
    fn from(v: Vec<u64>) -> Self {
        HVector(v)
    }
}

impl FromStr for HVector {
    type Err = String;

    /// Comma-separated nonnegative integers, e.g. `1,3,4,3,1`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("invalid h-vector entry {t:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(HVector)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Checks the SI conditions (symmetry plus O-sequence first half), naming the
/// first one that fails.
pub fn check_si_sequence(h: &HVector) -> Result<(), HVectorError> {
    let e = h.entries();
    if e.is_empty() {
        return Err(HVectorError::Empty);
    }
    if e[0] != 1 {
        return Err(HVectorError::FirstEntry(e[0]));
    }
    let s = e.len() - 1;
    for i in 0..=s / 2 {
        if e[i] != e[s - i] {
            return Err(HVectorError::NotSymmetric {
                index: i,
                mirror: s - i,
                left: e[i],
                right: e[s - i],
            });
        }
    }
    let a = half_difference(h);
    if let Some(i) = a.iter().position(|&v| v < 0) {
        return Err(HVectorError::NegativeDifference {
            index: i,
            value: a[i],
        });
    }
    if let Some((index, value, bound)) = o_sequence_violation(&a) {
        return Err(HVectorError::NotOSequence {
            index,
            value,
            bound,
        });
    }
    Ok(())
}

pub fn is_si_sequence(h: &HVector) -> bool {
    check_si_sequence(h).is_ok()
}

/// `(h_0, h_1 - h_0, ..., h_t - h_{t-1})` with `t = floor(s/2)`.
fn half_difference(h: &HVector) -> Vec<i64> {
    let t = (h.len() - 1) / 2;
    h.first_difference()[..=t].to_vec()
}

/// A validated SI-sequence with `h_1 = 3` and its derived sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIProfile {
    h: HVector,
    s: usize,
    t: usize,
    a: Vec<i64>,
    g: Vec<i64>,
}

impl SIProfile {
    pub fn h(&self) -> &HVector {
        &self.h
    }

    /// Index of the last entry of `h`.
    pub fn s(&self) -> usize {
        self.s
    }

    /// `floor(s / 2)`.
    pub fn t(&self) -> usize {
        self.t
    }

    /// `a_i = h_i - h_{i-1}` for `0 <= i <= t`.
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// h-vector of the complete intersection of type `(t+1, s-t+2)`,
    /// indices `0..=s+1`.
    pub fn g(&self) -> &[i64] {
        &self.g
    }

    /// `a_i`, extended by zeros past `t`.
    pub fn a_at(&self, i: usize) -> i64 {
        self.a.get(i).copied().unwrap_or(0)
    }

    /// Number of rows `t + 1` of the stick-figure grid.
    pub fn rows(&self) -> usize {
        self.t + 1
    }

    /// Number of columns `s - t + 2` of the stick-figure grid.
    pub fn cols(&self) -> usize {
        self.s - self.t + 2
    }
}

/// Validates `h` and computes `s`, `t`, `a`, `g`.
pub fn make_profile(h: &HVector) -> Result<SIProfile, HVectorError> {
    check_si_sequence(h)?;
    let e = h.entries();
    let h1 = e.get(1).copied().unwrap_or(0);
    if h1 != 3 {
        return Err(HVectorError::Codimension(h1));
    }
    let s = e.len() - 1;
    let t = s / 2;
    let a = half_difference(h);
    let limit = (s - t + 1) as i64;
    if let Some(i) = a.iter().position(|&v| v > limit) {
        return Err(HVectorError::ARange {
            index: i,
            value: a[i],
            limit,
        });
    }
    let g = (0..=s + 1)
        .map(|i| {
            if i <= t {
                i as i64 + 1
            } else if i <= s - t + 1 {
                t as i64 + 1
            } else {
                (s + 2 - i) as i64
            }
        })
        .collect();
    Ok(SIProfile {
        h: h.clone(),
        s,
        t,
        a,
        g,
    })
}

/// The residual h-vector `b` and the difference check `d = a + b - g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    /// `b_i = g_{s+1-i} - a_{s+1-i}`, trailing zeros removed.
    pub b: Vec<i64>,
    /// `d_i = a_i + b_i - g_i` for `i = 0..=s+1`.
    pub d: Vec<i64>,
}

/// Computes `b` and verifies that `d` is the first difference of `h`.
pub fn residual_b(profile: &SIProfile) -> Result<Residual> {
    let s = profile.s;
    let full_b: Vec<i64> = (0..=s + 1)
        .map(|i| profile.g[s + 1 - i] - profile.a_at(s + 1 - i))
        .collect();
    let d: Vec<i64> = (0..=s + 1)
        .map(|i| profile.a_at(i) + full_b[i] - profile.g[i])
        .collect();
    let expected = profile.h.first_difference();
    if d != expected {
        return Err(Error::Invariant(format!(
            "a + b - g = {d:?} differs from the first difference {expected:?}"
        )));
    }
    let mut b = full_b;
    while b.last() == Some(&0) {
        b.pop();
    }
    Ok(Residual { b, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(v: &[u64]) -> HVector {
        HVector::new(v.to_vec())
    }

    /// Every strictly decreasing chain `n_k > ... > n_j >= j >= 1` whose
    /// binomial sum is `n`, by exhaustive search.
    fn all_expansions(n: u64, i: u64) -> Vec<Vec<u64>> {
        fn go(k: u64, below: u64, rest: u128, chain: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            for m in k..below {
                let c = binomial(m, k);
                if c > rest {
                    break;
                }
                chain.push(m);
                if c == rest {
                    out.push(chain.clone());
                } else if k > 1 {
                    go(k - 1, m, rest - c, chain, out);
                }
                chain.pop();
            }
        }
        let mut out = Vec::new();
        go(i, n + i + 1, n.into(), &mut Vec::new(), &mut out);
        out
    }

    /// Number of degree-(d+1) monomials outside the ideal generated by all but
    /// the last `n` degree-d monomials in lex order, in `vars` variables.
    fn lex_segment_growth(vars: usize, d: u32, n: usize) -> usize {
        fn monomials(vars: usize, d: u32) -> Vec<Vec<u32>> {
            if vars == 1 {
                return vec![vec![d]];
            }
            let mut out = Vec::new();
            for e in (0..=d).rev() {
                for mut rest in monomials(vars - 1, d - e) {
                    rest.insert(0, e);
                    out.push(rest);
                }
            }
            out
        }
        let deg_d = monomials(vars, d);
        let kept: std::collections::HashSet<_> = deg_d[deg_d.len() - n..].iter().cloned().collect();
        monomials(vars, d + 1)
            .into_iter()
            .filter(|m| {
                (0..vars).filter(|&v| m[v] > 0).all(|v| {
                    let mut q = m.clone();
                    q[v] -= 1;
                    kept.contains(&q)
                })
            })
            .count()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(binomial_expansion(1, 1), vec![1]);
        assert_eq!(binomial_expansion(4, 2), vec![3, 1]);
        assert_eq!(binomial_expansion(6, 2), vec![4]);
        assert!(binomial_expansion(0, 3).is_empty());
    }

    #[test]
    fn macaulay_examples() {
        assert_eq!(macaulay_bound(0, 1), 0);
        assert_eq!(macaulay_bound(0, 4), 0);
        assert_eq!(macaulay_bound(4, 2), 5);
        assert_eq!(macaulay_bound(2, 1), 3);
        assert_eq!(macaulay_bound(3, 2), 4);
    }

    #[test]
    fn greedy_expansion_is_the_unique_chain() {
        for i in 1..=5 {
            for n in 1..=200 {
                let all = all_expansions(n, i);
                assert_eq!(all.len(), 1, "n={n} i={i}: {all:?}");
                assert_eq!(all[0], binomial_expansion(n, i));
            }
        }
    }

    #[test]
    fn macaulay_bound_matches_lex_segments() {
        // h_1 = 3 and 4 variables, small degrees.
        for vars in [3usize, 4] {
            for d in 1..=4u32 {
                let total = binomial(vars as u64 - 1 + d as u64, d as u64) as usize;
                for n in 1..=total {
                    assert_eq!(
                        lex_segment_growth(vars, d, n) as u64,
                        macaulay_bound(n as u64, d as u64),
                        "vars={vars} d={d} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn macaulay_bound_monotone() {
        for i in 1..=5 {
            for n in 0..200 {
                assert!(macaulay_bound(n, i) <= macaulay_bound(n + 1, i));
            }
        }
    }

    #[test]
    fn o_sequence_examples() {
        assert!(is_o_sequence(&[1, 2, 1]));
        assert!(!is_o_sequence(&[1, 3, 10]));
        assert!(is_o_sequence(&[1]));
        assert!(is_o_sequence(&[]));
        assert!(!is_o_sequence(&[2, 1]));
        assert!(!is_o_sequence(&[1, 2, -1]));
        assert!(!is_o_sequence(&[1, 1, 0, 1]));
    }

    #[test]
    fn si_examples() {
        assert!(is_si_sequence(&hv(&[1, 3, 4, 3, 1])));
        assert!(matches!(
            check_si_sequence(&hv(&[1, 3, 4, 2, 1])),
            Err(HVectorError::NotSymmetric { .. })
        ));
        assert!(is_si_sequence(&hv(&[1, 3, 5, 3, 1])));
        assert!(!is_si_sequence(&hv(&[1, 3, 7, 3, 1])));
        assert!(!is_si_sequence(&hv(&[1, 3, 2, 3, 1])));
        assert!(!is_si_sequence(&hv(&[])));
    }

    #[test]
    fn profile_of_worked_example() {
        let p = make_profile(&hv(&[1, 3, 4, 3, 1])).unwrap();
        assert_eq!((p.s(), p.t()), (4, 2));
        assert_eq!(p.a(), &[1, 2, 1]);
        assert_eq!(p.g(), &[1, 2, 3, 3, 2, 1]);
        let r = residual_b(&p).unwrap();
        assert_eq!(r.b, vec![1, 2, 3, 2]);
        assert_eq!(r.d, vec![1, 2, 1, -1, -2, -1]);
    }

    #[test]
    fn profile_of_odd_socle_degree() {
        let p = make_profile(&hv(&[1, 3, 3, 1])).unwrap();
        assert_eq!((p.s(), p.t()), (3, 1));
        assert_eq!(p.a(), &[1, 2]);
        assert_eq!(p.g(), &[1, 2, 2, 2, 1]);
        let r = residual_b(&p).unwrap();
        assert_eq!(r.b, vec![1, 2, 2]);
        assert_eq!(r.d, hv(&[1, 3, 3, 1]).first_difference());
    }

    #[test]
    fn profile_rejections() {
        assert_eq!(
            make_profile(&hv(&[1, 2, 1])),
            Err(HVectorError::Codimension(2))
        );
        assert_eq!(make_profile(&hv(&[1])), Err(HVectorError::Codimension(0)));
        assert!(matches!(
            make_profile(&hv(&[1, 3, 4, 2, 1])),
            Err(HVectorError::NotSymmetric { .. })
        ));
        assert_eq!(make_profile(&hv(&[])), Err(HVectorError::Empty));
    }

    #[test]
    fn parse_and_display() {
        let h: HVector = "1, 3,4,3,1".parse().unwrap();
        assert_eq!(h, hv(&[1, 3, 4, 3, 1]));
        assert_eq!(h.to_string(), "(1,3,4,3,1)");
        assert!("1,x".parse::<HVector>().is_err());
    }

    /// All SI-sequences with h_1 = 3 and s <= 8, by enumerating symmetric
    /// candidates with bounded entries.
    fn small_si_sequences() -> Vec<HVector> {
        let mut out = Vec::new();
        for s in 2..=8usize {
            let t = s / 2;
            let mut half = vec![1u64, 3];
            fn extend(half: &mut Vec<u64>, t: usize, s: usize, out: &mut Vec<HVector>) {
                if half.len() == t + 1 {
                    let mut h = half.clone();
                    for i in t + 1..=s {
                        h.push(half[s - i]);
                    }
                    let h = HVector::new(h);
                    if is_si_sequence(&h) {
                        out.push(h);
                    }
                    return;
                }
                for v in 0..=16 {
                    half.push(v);
                    extend(half, t, s, out);
                    half.pop();
                }
            }
            extend(&mut half, t, s, &mut out);
        }
        out
    }

    #[test]
    fn derived_sequence_identities() {
        let all = small_si_sequences();
        assert!(all.len() > 20);
        for h in all {
            let p = make_profile(&h).unwrap();
            let s = p.s();
            for i in 0..=s + 1 {
                assert_eq!(p.g()[i], p.g()[s + 1 - i], "g symmetric for {h}");
            }
            let r = residual_b(&p).unwrap();
            assert_eq!(r.d.iter().sum::<i64>(), 0);
            for i in 0..=p.t() {
                assert_eq!(r.d[i], p.a()[i]);
            }
        }
    }
}
