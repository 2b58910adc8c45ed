use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{RatMatrix, Rational};
use crate::error::{Error, Result};

/// Integer polynomial, coefficients stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Re-signs a monic `det(xI - A)` into `det(A - xI)`, i.e. multiplies by
    /// `(-1)^n`. This is the convention under which a 7-vertex graph's
    /// characteristic polynomial has leading term `-x^7`.
    pub fn det_a_minus_x(&self) -> Self {
        match self.degree() {
            Some(d) if d % 2 == 1 => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Quotient by `(x - root)` computed over the rationals; the caller must
    /// know that `root` is a root.
    fn deflate(coeffs: &[Rational], root: &Rational) -> Vec<Rational> {
        let n = coeffs.len();
        let mut out = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &coeffs[i] + carry * root;
            out[i - 1] = carry.clone();
        }
        out
    }

    /// Lowest-degree-first terms, e.g. `-16x^2 - 16x^3 + 10x^4 + 11x^5 - x^7`.
    pub fn to_ascending_string(&self) -> String {
        render_terms(self.coeffs.iter().enumerate())
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (usize, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (power, c) in terms.filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_mag = power == 0 || !mag.is_one();
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match power {
            0 => {}
            1 => out.push('x'),
            p => out.push_str(&format!("x^{p}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPolynomial {
    /// Highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.coeffs.iter().enumerate().rev()))
    }
}

/// Monic characteristic polynomial `det(xI - A)` of an integer matrix, by the
/// Faddeev-LeVerrier recurrence. Every division in the recurrence is exact
/// over the integers, so no fractions ever appear.
pub fn char_poly(a: &RatMatrix) -> Result<IntPolynomial> {
    if !a.is_square() {
        return Err(Error::InvalidInput("characteristic polynomial of a non-square matrix".into()));
    }
    if !a.is_integral() {
        return Err(Error::InvalidInput("characteristic polynomial needs integer entries".into()));
    }
    let n = a.rows();
    let ai: Vec<BigInt> = a.entries().iter().map(|x| x.to_integer()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_k; starts at M_0 = 0.
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = int_matmul(&ai, &m, n);
        for i in 0..n {
            next[i * n + i] += &coeffs[n - k + 1];
        }
        // c_{n-k} = -tr(A M_k) / k
        let am = int_matmul(&ai, &next, n);
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
        coeffs[n - k] = -q;
        m = next;
    }
    Ok(IntPolynomial::new(coeffs))
}

fn int_matmul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

/// Integer `R` with every complex root satisfying `|z| <= R` (Fujiwara).
fn root_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree().expect("non-zero polynomial");
    let lead = p.leading().unwrap().abs();
    let mut best = BigInt::zero();
    for i in 1..=n {
        let mut c = p.coeff(n - i).abs();
        if c.is_zero() {
            continue;
        }
        let mut den = lead.clone();
        if i == n {
            den *= 2;
        }
        // ceil(c / den)
        c = (c + &den - 1u32) / den;
        let r = c.nth_root(i as u32) + 1u32;
        best = best.max(r);
    }
    best * 2u32
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots with exact multiplicities, largest root first.
///
/// Candidates come from the rational root theorem on the primitive part,
/// restricted by an a-priori bound on root magnitude; each root found is
/// divided out repeatedly to obtain its multiplicity.
pub fn rational_roots(p: &IntPolynomial) -> Vec<(Rational, usize)> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let mut roots = Vec::new();
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = IntPolynomial::new(p.coeffs()[zero_mult..].to_vec()).primitive_part();
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if stripped.degree().unwrap_or(0) == 0 {
        return finish(roots);
    }

    let mut work: Vec<Rational> = stripped
        .coeffs()
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    let constant = stripped.coeff(0).abs();
    let bound = root_bound(&stripped);
    for den in positive_divisors(stripped.leading().unwrap()) {
        let num_bound = (&bound * &den).min(constant.clone());
        let mut num = BigInt::one();
        while num <= num_bound {
            if (&constant % &num).is_zero() && num.gcd(&den).is_one() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let cand = Rational::new(BigInt::from_biguint(sign, num.magnitude().clone()), den.clone());
                    let mut mult = 0;
                    while work.len() > 1 && eval_rat(&work, &cand).is_zero() {
                        work = IntPolynomial::deflate(&work, &cand);
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
            num += 1u32;
        }
    }
    finish(roots)
}

fn eval_rat(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn finish(mut roots: Vec<(Rational, usize)>) -> Vec<(Rational, usize)> {
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    roots
}
