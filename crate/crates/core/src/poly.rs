//! Complex polynomial and rational-function arithmetic: evaluation,
//! derivatives, roots with multiplicities, exact division, and the
//! boundary-modulus trigonometric polynomials |p2|^2 - |p1|^2.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol;
use crate::wire;

/// Complex polynomial in ascending powers. The zero polynomial is the empty
/// coefficient sequence; a nonzero polynomial keeps its trailing (degree)
/// coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    #[serde(with = "wire::complex_vec")]
    pub coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Monomial c * z^k.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::default(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// leading * prod (z - root)^mult, expanded.
    pub fn from_roots(leading: Complex64, roots: &[(Complex64, usize)]) -> Self {
        let mut p = Polynomial::constant(leading);
        for &(root, mult) in roots {
            let factor = Polynomial::new(vec![-root, Complex64::new(1.0, 0.0)]);
            for _ in 0..mult {
                p = p.mul(&factor);
            }
        }
        p
    }

    /// Drops trailing coefficients that are zero relative to the largest one.
    fn trim(&mut self) {
        let scale = self.max_norm();
        if scale == 0.0 {
            self.coeffs.clear();
            return;
        }
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= tol::TRIM_REL * scale {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial: its degree is undefined and callers
    /// must branch explicitly.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Derivatives of order 0..=k at z.
    pub fn derivatives_at(&self, z: Complex64, k: usize) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(k + 1);
        let mut p = self.clone();
        for _ in 0..=k {
            out.push(p.eval(z));
            p = p.derivative();
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::default(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(k) + other.coeff(k);
        }
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Complex64::default(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Multiply by z^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Complex64::default(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial::new(coeffs)
    }

    pub fn conj_coeffs(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Euclidean division: self = d * quotient + remainder.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        if self.is_zero() || self.degree().unwrap() < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = self.degree().unwrap();
        let lead = d.leading();
        let mut quot = vec![Complex64::default(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let factor = rem[k + dd] / lead;
            quot[k] = factor;
            for j in 0..=dd {
                rem[k + j] -= factor * d.coeff(j);
            }
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, c)| match k {
                0 => format!("({:.6}{:+.6}i)", c.re, c.im),
                1 => format!("({:.6}{:+.6}i)z", c.re, c.im),
                _ => format!("({:.6}{:+.6}i)z^{}", c.re, c.im, k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Quotient of polynomials whose denominator is zero-free on the closed unit
/// disk. Construction checks the pole locations and cancels common roots of
/// numerator and denominator up to the clustering tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DenominatorZeroInDisk { modulus: 0.0 });
        }
        let (num, den) = reduce_common_roots(num, den)?;
        if den.degree() == Some(0) {
            let c = den.coeff(0);
            return Ok(RationalFunction {
                num: num.scale(c.inv()),
                den: Polynomial::one(),
            });
        }
        for (root, _) in poly_roots(&den, tol::CLUSTER_TOL)? {
            if root.norm() <= 1.0 + tol::TAU_DISK {
                return Err(Error::DenominatorZeroInDisk { modulus: root.norm() });
            }
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Complex64) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Quotient-rule derivative. The denominator square keeps the
    /// pole-location invariant.
    pub fn derivative(&self) -> RationalFunction {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RationalFunction { num, den: self.den.mul(&self.den) }
    }

    /// Derivatives of order 0..=k at z, via the quotient rule on coefficient
    /// level (Leibniz on num = rf * den).
    pub fn derivatives_at(&self, z: Complex64, k: usize) -> Vec<Complex64> {
        let nd = self.num.derivatives_at(z, k);
        let dd = self.den.derivatives_at(z, k);
        let mut out: Vec<Complex64> = Vec::with_capacity(k + 1);
        for m in 0..=k {
            // num^(m) = sum_{i} C(m,i) f^(i) den^(m-i)  =>  solve for f^(m)
            let mut acc = nd[m];
            for i in 0..m {
                acc -= binomial(m, i) * out[i] * dd[m - i];
            }
            out.push(acc / dd[0]);
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> RationalFunction {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

fn reduce_common_roots(num: Polynomial, den: Polynomial) -> Result<(Polynomial, Polynomial)> {
    if num.is_zero() || den.degree() == Some(0) || num.degree() == Some(0) {
        return Ok((num, den));
    }
    let nroots = poly_roots(&num, tol::CLUSTER_TOL)?;
    let droots = poly_roots(&den, tol::CLUSTER_TOL)?;
    let mut common: Vec<(Complex64, usize)> = Vec::new();
    for &(r, m) in &nroots {
        for &(s, md) in &droots {
            let scale = 1.0f64.max(r.norm());
            if (r - s).norm() <= tol::CLUSTER_TOL * scale {
                common.push((0.5 * (r + s), m.min(md)));
            }
        }
    }
    if common.is_empty() {
        return Ok((num, den));
    }
    let factor = Polynomial::from_roots(Complex64::new(1.0, 0.0), &common);
    // Cancellation is only approximate at clustered roots; a loose remainder
    // tolerance keeps legitimate reductions while rejecting accidents.
    let num_r = poly_divide_exact(&num, &factor, 1e-6)?;
    let den_r = poly_divide_exact(&den, &factor, 1e-6)?;
    Ok((num_r, den_r))
}

/// Roots of p with multiplicities, by companion-matrix eigenvalues, Newton
/// polishing, and greedy clustering. `cluster_tol` is scaled by the root
/// magnitude before comparisons.
pub fn poly_roots(p: &Polynomial, cluster_tol: f64) -> Result<Vec<(Complex64, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.degree().unwrap();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = p.leading();
    let monic: Vec<Complex64> = p.coeffs.iter().map(|&c| c / lead).collect();

    let mut raw = if n == 1 {
        vec![-monic[0]]
    } else {
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = Complex64::new(1.0, 0.0);
        }
        for i in 0..n {
            m[(i, n - 1)] = -monic[i];
        }
        let schur = m.schur();
        let eigs = schur
            .eigenvalues()
            .ok_or_else(|| Error::RootsDiverged("companion Schur iteration failed".into()))?;
        eigs.iter().cloned().collect::<Vec<_>>()
    };

    let dp = p.derivative();
    for root in raw.iter_mut() {
        *root = newton_polish(p, &dp, *root);
    }

    // Greedy clustering: grow each cluster around its running mean.
    let mut used = vec![false; raw.len()];
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for i in 0..raw.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut sum = raw[i];
        let mut count = 1usize;
        loop {
            let mean = sum / count as f64;
            let tol_eff = cluster_tol * 1.0f64.max(mean.norm());
            let mut grew = false;
            for (j, r) in raw.iter().enumerate() {
                if !used[j] && (r - mean).norm() <= tol_eff {
                    used[j] = true;
                    sum += r;
                    count += 1;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        clusters.push((sum / count as f64, count));
    }

    // A multiplicity-m root is a simple root of the (m-1)-th derivative;
    // polishing there recovers full accuracy lost to eigenvalue splitting.
    for (root, mult) in clusters.iter_mut() {
        if *mult > 1 {
            let mut d = p.clone();
            for _ in 0..*mult - 1 {
                d = d.derivative();
            }
            let dd = d.derivative();
            *root = newton_polish(&d, &dd, *root);
        }
    }

    clusters.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let total: usize = clusters.iter().map(|c| c.1).sum();
    if total != n {
        return Err(Error::RootsDiverged(format!(
            "clustered multiplicities sum to {total}, expected {n}"
        )));
    }
    Ok(clusters)
}

fn newton_polish(p: &Polynomial, dp: &Polynomial, start: Complex64) -> Complex64 {
    let mut x = start;
    let mut best = x;
    let mut best_val = p.eval(x).norm();
    for _ in 0..24 {
        let fx = p.eval(x);
        let dfx = dp.eval(x);
        if dfx.norm() == 0.0 {
            break;
        }
        let step = fx / dfx;
        x -= step;
        if !x.re.is_finite() || !x.im.is_finite() {
            return best;
        }
        let val = p.eval(x).norm();
        if val < best_val {
            best_val = val;
            best = x;
        }
        if step.norm() <= 1e-16 * 1.0f64.max(x.norm()) {
            break;
        }
    }
    best
}

/// Quotient of p by d when the division is exact up to `rem_tol` relative to
/// the dividend; errors out with the residual norm otherwise.
pub fn poly_divide_exact(p: &Polynomial, d: &Polynomial, rem_tol: f64) -> Result<Polynomial> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    let (q, r) = p.div_rem(d);
    let scale = p.max_norm().max(f64::MIN_POSITIVE);
    let residual = r.max_norm();
    if residual <= rem_tol * scale {
        Ok(q)
    } else {
        Err(Error::NotDivisible { residual, tol: rem_tol * scale })
    }
}

/// Real trigonometric polynomial sum c_j e^{ij theta}, j = -n..n, stored with
/// Hermitian symmetry c_{-j} = conj(c_j) enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    /// Coefficients indexed -n..n, length 2n+1.
    c: Vec<Complex64>,
}

impl TrigPolynomial {
    /// `c` holds coefficients for indices -n..n in order. Symmetry defects
    /// beyond 1e-8 (relative) are rejected; smaller ones are symmetrized away.
    pub fn new(c: Vec<Complex64>) -> Result<Self> {
        if c.len() % 2 != 1 {
            return Err(Error::InvalidSpectralSymbol(
                "coefficient vector must have odd length 2n+1".into(),
            ));
        }
        let len = c.len();
        let scale = c.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        let mut sym = c.clone();
        for k in 0..len {
            let mirror = len - 1 - k;
            let defect = (c[k] - c[mirror].conj()).norm();
            if defect > 1e-8 * scale {
                return Err(Error::InvalidSpectralSymbol(format!(
                    "Hermitian symmetry violated by {defect:.3e}"
                )));
            }
            sym[k] = 0.5 * (c[k] + c[mirror].conj());
        }
        Ok(TrigPolynomial { c: sym })
    }

    pub fn n(&self) -> usize {
        self.c.len() / 2
    }

    /// Coefficient c_k for any integer k (zero outside -n..n).
    pub fn coeff(&self, k: i64) -> Complex64 {
        let n = self.n() as i64;
        if k < -n || k > n {
            Complex64::default()
        } else {
            self.c[(k + n) as usize]
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.c
    }

    /// Coefficients of |p(e^{i theta})|^2: the autocorrelation of p.
    pub fn from_modulus_squared(p: &Polynomial) -> Self {
        if p.is_zero() {
            return TrigPolynomial { c: vec![Complex64::default()] };
        }
        let n = p.degree().unwrap();
        let mut c = vec![Complex64::default(); 2 * n + 1];
        for j in -(n as i64)..=(n as i64) {
            let mut acc = Complex64::default();
            for k in 0..=n {
                let idx = k as i64 + j;
                if idx >= 0 && idx <= n as i64 {
                    acc += p.coeff(idx as usize) * p.coeff(k).conj();
                }
            }
            c[(j + n as i64) as usize] = acc;
        }
        TrigPolynomial { c }
    }

    pub fn sub(&self, other: &TrigPolynomial) -> TrigPolynomial {
        let n = self.n().max(other.n()) as i64;
        let c = (-n..=n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        TrigPolynomial { c }
    }

    /// Real value at e^{i theta}.
    pub fn eval(&self, theta: f64) -> f64 {
        let n = self.n() as i64;
        let mut acc = self.coeff(0).re;
        for k in 1..=n {
            let e = Complex64::from_polar(1.0, k as f64 * theta);
            acc += 2.0 * (self.coeff(k) * e).re;
        }
        acc
    }

    pub fn min_on_grid(&self, points: usize) -> f64 {
        (0..points)
            .map(|k| self.eval(2.0 * std::f64::consts::PI * k as f64 / points as f64))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Identically zero up to `rel` times the constant-coefficient scale.
    pub fn is_zero(&self, rel: f64) -> bool {
        self.max_coeff_norm() <= rel
    }

    /// Drops the outermost coefficient pair while it is numerically zero.
    pub fn reduced(&self, rel: f64) -> TrigPolynomial {
        let scale = self.max_coeff_norm().max(f64::MIN_POSITIVE);
        let mut c = self.c.clone();
        while c.len() > 1 {
            let n = c.len() - 1;
            if c[0].norm() <= rel * scale && c[n].norm() <= rel * scale {
                c.remove(n);
                c.remove(0);
            } else {
                break;
            }
        }
        TrigPolynomial { c }
    }
}

#[derive(Serialize, Deserialize)]
struct TrigWire {
    n: usize,
    #[serde(with = "wire::complex_vec")]
    c: Vec<Complex64>,
}

impl Serialize for TrigPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TrigWire { n: self.n(), c: self.c.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TrigPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = TrigWire::deserialize(d)?;
        if w.c.len() != 2 * w.n + 1 {
            return Err(serde::de::Error::custom("trig polynomial length must be 2n+1"));
        }
        TrigPolynomial::new(w.c).map_err(serde::de::Error::custom)
    }
}

/// Boundary defect w(e^{i theta}) = |p2|^2 - |p1|^2 of q = p1/p2. Rejects q
/// whose defect dips below -EPS_NEG on the sampling grid: such q lie outside
/// the closed unit ball.
pub fn boundary_defect(q: &RationalFunction) -> Result<TrigPolynomial> {
    let den_sq = TrigPolynomial::from_modulus_squared(&q.den);
    let num_sq = TrigPolynomial::from_modulus_squared(&q.num);
    let w = den_sq.sub(&num_sq);
    let min = w.min_on_grid(tol::GRID_DEFECT);
    if min < -tol::EPS_NEG * den_sq.max_coeff_norm().max(1.0) {
        return Err(Error::NotInBall { min_value: min });
    }
    Ok(w)
}

/// theta_k, e^{i theta_k} for k = 0..points.
pub fn unit_circle_grid(points: usize) -> impl Iterator<Item = (f64, Complex64)> {
    (0..points).map(move |k| {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / points as f64;
        (theta, Complex64::from_polar(1.0, theta))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn roots_of_perfect_square() {
        let p = Polynomial::from_real(&[1.0, -2.0, 1.0]);
        let roots = poly_roots(&p, tol::CLUSTER_TOL).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 2);
        assert_abs_diff_eq!(roots[0].0.re, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(roots[0].0.im, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn roots_of_shifted_quartic() {
        // -(1/16)(z^4 + 4z^3 - 10z^2 + 4z + 1): double root at 1 plus the
        // reciprocal pair -3 +- 2 sqrt(2). (The quartic vanishes at +1, not
        // at -1: 1 + 4 - 10 + 4 + 1 = 0.)
        let p = Polynomial::from_real(&[
            -1.0 / 16.0,
            -4.0 / 16.0,
            10.0 / 16.0,
            -4.0 / 16.0,
            -1.0 / 16.0,
        ]);
        let roots = poly_roots(&p, tol::CLUSTER_TOL).unwrap();
        assert_eq!(roots.len(), 3);
        let s2 = 2.0f64.sqrt();
        let expect = [(-3.0 - 2.0 * s2, 1usize), (-3.0 + 2.0 * s2, 1), (1.0, 2)];
        for ((root, mult), (er, em)) in roots.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(root.re, *er, epsilon = 1e-8);
            assert_abs_diff_eq!(root.im, 0.0, epsilon = 1e-8);
            assert_eq!(mult, em);
        }
    }

    #[test]
    fn roots_of_pure_cube() {
        let p = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]);
        let roots = poly_roots(&p, tol::CLUSTER_TOL).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 3);
        assert!(roots[0].0.norm() < 1e-6);
    }

    #[test]
    fn roots_of_zero_polynomial_is_an_error() {
        assert!(matches!(
            poly_roots(&Polynomial::zero(), tol::CLUSTER_TOL),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn divide_exact_examples() {
        let p = Polynomial::from_real(&[-1.0, 0.0, 1.0]);
        let d = Polynomial::from_real(&[-1.0, 1.0]);
        let q = poly_divide_exact(&p, &d, tol::REM_TOL).unwrap();
        assert_eq!(q.degree(), Some(1));
        assert_abs_diff_eq!(q.coeff(0).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(q.coeff(1).re, 1.0, epsilon = 1e-12);

        // (1 - z)/2 divided by (1 - z) leaves the constant 1/2.
        let p = Polynomial::from_real(&[0.5, -0.5]);
        let d = Polynomial::from_real(&[1.0, -1.0]);
        let q = poly_divide_exact(&p, &d, tol::REM_TOL).unwrap();
        assert_eq!(q.degree(), Some(0));
        assert_abs_diff_eq!(q.coeff(0).re, 0.5, epsilon = 1e-12);

        let p = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]);
        let d = Polynomial::from_real(&[-1.0, 1.0]);
        assert!(matches!(
            poly_divide_exact(&p, &d, tol::REM_TOL),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn defect_of_product_example() {
        // q = (1-z)(1+z)/2
        let q = RationalFunction::from_polynomial(Polynomial::from_real(&[0.5, 0.0, -0.5]));
        let w = boundary_defect(&q).unwrap();
        assert_eq!(w.n(), 2);
        assert_abs_diff_eq!(w.coeff(-2).re, 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(w.coeff(0).re, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(w.coeff(2).re, 0.25, epsilon = 1e-14);
        assert!(w.coeff(1).norm() < 1e-14);
    }

    #[test]
    fn defect_of_squared_atom() {
        // q = (1+z)^2/4
        let q = RationalFunction::from_polynomial(Polynomial::from_real(&[0.25, 0.5, 0.25]));
        let w = boundary_defect(&q).unwrap();
        assert_abs_diff_eq!(w.coeff(0).re, 5.0 / 8.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w.coeff(1).re, -0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(w.coeff(2).re, -1.0 / 16.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w.coeff(-1).re, -0.25, epsilon = 1e-14);
    }

    #[test]
    fn defect_of_constant() {
        let q = RationalFunction::constant(c(0.5, 0.0));
        let w = boundary_defect(&q).unwrap();
        assert_eq!(w.n(), 0);
        assert_abs_diff_eq!(w.coeff(0).re, 0.75, epsilon = 1e-14);
    }

    #[test]
    fn defect_rejects_function_outside_ball() {
        let q = RationalFunction::from_polynomial(Polynomial::from_real(&[0.0, 1.5]));
        assert!(matches!(boundary_defect(&q), Err(Error::NotInBall { .. })));
    }

    #[test]
    fn defect_matches_pointwise_formula() {
        // w(theta) = (1 - |q|^2) |p2|^2 pointwise.
        let q = RationalFunction::new(
            Polynomial::from_real(&[1.0, 1.0]),
            Polynomial::from_real(&[3.0, -1.0]),
        )
        .unwrap();
        let w = boundary_defect(&q).unwrap();
        for (theta, z) in unit_circle_grid(1024) {
            let p2 = q.den.eval(z).norm_sqr();
            let expected = (1.0 - q.eval(z).norm_sqr()) * p2;
            assert_abs_diff_eq!(w.eval(theta), expected, epsilon = 1e-10);
        }
    }

    #[test]
    fn rational_rejects_interior_pole() {
        let r = RationalFunction::new(
            Polynomial::one(),
            Polynomial::from_real(&[-0.5, 1.0]),
        );
        assert!(matches!(r, Err(Error::DenominatorZeroInDisk { .. })));
    }

    #[test]
    fn rational_cancels_common_roots() {
        // (z-2)(z+3) / (z-2) -> z+3
        let num = Polynomial::from_roots(
            c(1.0, 0.0),
            &[(c(2.0, 0.0), 1), (c(-3.0, 0.0), 1)],
        );
        let den = Polynomial::from_roots(c(1.0, 0.0), &[(c(2.0, 0.0), 1)]);
        let r = RationalFunction::new(num, den).unwrap();
        assert!(r.is_polynomial());
        assert_abs_diff_eq!(r.eval(c(0.0, 0.0)).re, 3.0, epsilon = 1e-9);
    }

    #[test]
    fn rational_derivatives_match_polynomial_path() {
        let r = RationalFunction::new(
            Polynomial::from_real(&[1.0, 1.0]),
            Polynomial::from_real(&[3.0, -1.0]),
        )
        .unwrap();
        let z = c(0.3, 0.2);
        let derivs = r.derivatives_at(z, 3);
        let d1 = r.derivative();
        let d2 = d1.derivative();
        assert_abs_diff_eq!(derivs[1].re, d1.eval(z).re, epsilon = 1e-10);
        assert_abs_diff_eq!(derivs[1].im, d1.eval(z).im, epsilon = 1e-10);
        assert_abs_diff_eq!(derivs[2].re, d2.eval(z).re, epsilon = 1e-10);
        assert_abs_diff_eq!(derivs[2].im, d2.eval(z).im, epsilon = 1e-10);
    }

    #[test]
    fn trig_rejects_asymmetric_coefficients() {
        let c = vec![c(0.3, 0.1), c(1.0, 0.0), c(0.7, 0.0)];
        assert!(TrigPolynomial::new(c).is_err());
    }

    fn random_poly(rng: &mut ChaCha8Rng, deg: usize, root_radius: f64) -> Polynomial {
        let roots: Vec<(Complex64, usize)> = (0..deg)
            .map(|_| {
                let r = root_radius * rng.gen::<f64>().sqrt();
                let th = rng.gen::<f64>() * std::f64::consts::TAU;
                (Complex64::from_polar(r, th), 1usize)
            })
            .collect();
        Polynomial::from_roots(c(1.0, 0.0), &roots)
    }

    #[test]
    fn roots_roundtrip_random_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let deg = rng.gen_range(1..=10);
            let p = random_poly(&mut rng, deg, 2.0);
            let roots = poly_roots(&p, tol::CLUSTER_TOL).unwrap();
            let rebuilt = Polynomial::from_roots(p.leading(), &roots);
            let scale = p.max_norm();
            for k in 0..p.coeffs.len() {
                assert!(
                    (rebuilt.coeff(k) - p.coeff(k)).norm() <= 1e-8 * scale,
                    "coefficient {k} off by {:.3e}",
                    (rebuilt.coeff(k) - p.coeff(k)).norm()
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn divide_recovers_factor(seed in 0u64..1_000_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = random_poly(&mut rng, rng.gen_range(1..=4), 1.5);
            let h = random_poly(&mut rng, rng.gen_range(0..=4), 1.5);
            let p = d.mul(&h);
            let q = poly_divide_exact(&p, &d, 1e-10).unwrap();
            let scale = h.max_norm().max(1e-30);
            for k in 0..h.coeffs.len().max(q.coeffs.len()) {
                prop_assert!((q.coeff(k) - h.coeff(k)).norm() <= 1e-9 * scale);
            }
        }

        #[test]
        fn modulus_squared_is_nonnegative(seed in 0u64..1_000_000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_poly(&mut rng, rng.gen_range(1..=6), 2.0);
            let w = TrigPolynomial::from_modulus_squared(&p);
            for (theta, z) in unit_circle_grid(257) {
                let direct = p.eval(z).norm_sqr();
                prop_assert!((w.eval(theta) - direct).abs() <= 1e-9 * direct.max(1.0));
            }
        }
    }
}
