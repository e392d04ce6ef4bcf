//! Brute-force intersection-theory verifier for the secant-plane counts.
//!
//! The rank-d secant bundle over the d-fold product C^d of a curve has
//! Chern polynomial (1 + l_1 t)(1 + (l_2 - D_2) t) ... (1 + (l_d - D_d) t),
//! where l_j pulls back the degree-m line-bundle class along the j-th
//! projection and D_j = sum_{i<j} D_{i,j} decomposes into small diagonals.
//! The count d! N_d(g, m) is the degree of the standard determinant in
//! these Chern classes; this module expands that determinant into monomials
//! in the D_{i,j} and l_j, reduces each by
//!
//!   l_j . D_{i,j} = m {pt_i} . D_{i,j},
//!   D_{i,j}^2     = -(2g-2) {pt_i} . D_{i,j},
//!   l_j^2 = 0,  D_{i,j}^3 = 0,
//!
//! and evaluates the degree on C^d, keeping m and gamma = 2g - 2 symbolic.

use crate::exact::{binomial_int, exact_str, factorial, pow4, rat, Rational};
use crate::Error;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Default cap on the incidence d. Expansion cost grows quickly; 6 runs in
/// seconds, 7 in minutes.
pub const DEFAULT_ORACLE_CAP: usize = 6;

/// Hint appended to cap errors.
pub const CAP_HINT: &str = "raise it with SECANT_ORACLE_CAP or an explicit cap argument";

/// The effective cap: `SECANT_ORACLE_CAP` when set to a valid integer,
/// otherwise [`DEFAULT_ORACLE_CAP`].
pub fn oracle_cap() -> usize {
    std::env::var("SECANT_ORACLE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

/// A squarefree-in-l, at-most-square-in-D monomial in the diagonal classes
/// D_{i,j} (1 <= i < j <= d) and line classes l_j.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// (i, j, multiplicity), sorted by (i, j); indices are 1-based.
    diagonals: Vec<(u8, u8, u8)>,
    /// (j, multiplicity), sorted; indices are 1-based.
    lines: Vec<(u8, u8)>,
}

impl Monomial {
    fn one() -> Self {
        Monomial::default()
    }

    fn line(j: u8) -> Self {
        Monomial {
            diagonals: Vec::new(),
            lines: vec![(j, 1)],
        }
    }

    fn diagonal(i: u8, j: u8) -> Self {
        assert!(i < j);
        Monomial {
            diagonals: vec![(i, j, 1)],
            lines: Vec::new(),
        }
    }

    /// Total cohomological degree (number of divisor-class factors).
    pub fn degree(&self) -> usize {
        self.diagonals.iter().map(|&(_, _, m)| m as usize).sum::<usize>()
            + self.lines.iter().map(|&(_, m)| m as usize).sum::<usize>()
    }

    pub fn diagonal_multiplicities(&self) -> &[(u8, u8, u8)] {
        &self.diagonals
    }

    pub fn line_factors(&self) -> &[(u8, u8)] {
        &self.lines
    }

    /// Product of two monomials; `None` when the result dies identically
    /// (a line class squared, or a diagonal cubed).
    fn try_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut diagonals = Vec::with_capacity(self.diagonals.len() + other.diagonals.len());
        let (mut a, mut b) = (self.diagonals.iter().peekable(), other.diagonals.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i1, j1, m1)), Some(&&(i2, j2, m2))) => {
                    if (i1, j1) == (i2, j2) {
                        if m1 + m2 > 2 {
                            return None;
                        }
                        diagonals.push((i1, j1, m1 + m2));
                        a.next();
                        b.next();
                    } else if (i1, j1) < (i2, j2) {
                        diagonals.push((i1, j1, m1));
                        a.next();
                    } else {
                        diagonals.push((i2, j2, m2));
                        b.next();
                    }
                }
                (Some(&&t), None) => {
                    diagonals.push(t);
                    a.next();
                }
                (None, Some(&&t)) => {
                    diagonals.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        let mut lines = Vec::with_capacity(self.lines.len() + other.lines.len());
        let (mut a, mut b) = (self.lines.iter().peekable(), other.lines.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(j1, m1)), Some(&&(j2, m2))) => {
                    if j1 == j2 {
                        // l_j^2 = 0
                        let _ = m1 + m2;
                        return None;
                    } else if j1 < j2 {
                        lines.push((j1, m1));
                        a.next();
                    } else {
                        lines.push((j2, m2));
                        b.next();
                    }
                }
                (Some(&&t), None) => {
                    lines.push(t);
                    a.next();
                }
                (None, Some(&&t)) => {
                    lines.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        if lines.iter().any(|&(_, m)| m > 1) {
            return None;
        }
        Some(Monomial { diagonals, lines })
    }
}

/// One signed monomial of a formal intersection sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTerm {
    pub coefficient: Rational,
    pub monomial: Monomial,
}

/// Formal sum of monomials with rational coefficients, with deterministic
/// term order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl IntersectionPoly {
    fn zero() -> Self {
        IntersectionPoly::default()
    }

    fn one() -> Self {
        let mut p = Self::zero();
        p.terms.insert(Monomial::one(), Rational::one());
        p
    }

    fn add_term(&mut self, mon: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mon) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add(&self, other: &IntersectionPoly) -> IntersectionPoly {
        let mut out = self.clone();
        for (mon, c) in &other.terms {
            out.add_term(mon.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &IntersectionPoly) -> IntersectionPoly {
        let mut out = self.clone();
        for (mon, c) in &other.terms {
            out.add_term(mon.clone(), -c.clone());
        }
        out
    }

    fn mul(&self, other: &IntersectionPoly) -> IntersectionPoly {
        let mut out = IntersectionPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(prod) = m1.try_mul(m2) {
                    out.add_term(prod, c1 * c2);
                }
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = IntersectionTerm> + '_ {
        self.terms.iter().map(|(m, c)| IntersectionTerm {
            coefficient: c.clone(),
            monomial: m.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Exact polynomial in the two formal variables m and gamma = 2g - 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GmPolynomial {
    /// (power of m, power of gamma) -> coefficient.
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl GmPolynomial {
    pub fn zero() -> Self {
        GmPolynomial::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.coeffs.insert((0, 0), Rational::one());
        p
    }

    pub fn add_term(&mut self, m_pow: u32, gamma_pow: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry((m_pow, gamma_pow))
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(m_pow, gamma_pow));
        }
    }

    pub fn add(&self, other: &GmPolynomial) -> GmPolynomial {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k.0, k.1, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &GmPolynomial) -> GmPolynomial {
        let mut out = GmPolynomial::zero();
        for (&(a, b), c1) in &self.coeffs {
            for (&(p, q), c2) in &other.coeffs {
                out.add_term(a + p, b + q, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> GmPolynomial {
        let mut out = GmPolynomial::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k.0, k.1, c * s);
        }
        out
    }

    /// Coefficient of m^{m_pow} gamma^{gamma_pow}.
    pub fn coeff(&self, m_pow: u32, gamma_pow: u32) -> Rational {
        self.coeffs
            .get(&(m_pow, gamma_pow))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Evaluate at integer m with gamma = 2g - 2.
    pub fn eval(&self, m: i64, g: i64) -> Rational {
        let (mq, gq) = (rat(m), rat(2 * g - 2));
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.coeffs {
            let mut term = c.clone();
            for _ in 0..a {
                term *= &mq;
            }
            for _ in 0..b {
                term *= &gq;
            }
            acc += term;
        }
        acc
    }

    /// Largest total degree (in m and gamma jointly) of a nonzero term.
    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for GmPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.coeffs.keys().collect();
        keys.sort_by_key(|&&(a, b)| (std::cmp::Reverse(a + b), std::cmp::Reverse(a)));
        for (idx, &&(a, b)) in keys.iter().enumerate() {
            let c = &self.coeffs[&(a, b)];
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = match (a, b) {
                (0, 0) => String::new(),
                (1, 0) => "m".into(),
                (a, 0) => format!("m^{}", a),
                (0, 1) => "γ".into(),
                (0, b) => format!("γ^{}", b),
                (1, 1) => "mγ".into(),
                (a, 1) => format!("m^{}γ", a),
                (1, b) => format!("mγ^{}", b),
                (a, b) => format!("m^{}γ^{}", a, b),
            };
            if vars.is_empty() {
                write!(f, "{}", exact_str(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{}{}", exact_str(&mag), vars)?;
            }
        }
        Ok(())
    }
}

/// The Chern roots x_1 = l_1, x_j = l_j - sum_{i<j} D_{i,j} of the secant
/// bundle, as formal sums.
fn chern_roots(d: usize) -> Vec<IntersectionPoly> {
    (1..=d as u8)
        .map(|j| {
            let mut p = IntersectionPoly::zero();
            p.add_term(Monomial::line(j), Rational::one());
            for i in 1..j {
                p.add_term(Monomial::diagonal(i, j), -Rational::one());
            }
            p
        })
        .collect()
}

fn check_cap(d: usize, cap: usize) -> Result<(), Error> {
    if d > cap {
        return Err(Error::CapExceeded {
            what: "oracle incidence d",
            requested: d,
            cap,
            hint: CAP_HINT,
        });
    }
    Ok(())
}

/// Chern classes c_1, ..., c_d of the secant bundle as expanded sums of
/// [`IntersectionTerm`]s (elementary symmetric functions of the roots).
pub fn chern_classes(d: usize) -> Result<Vec<Vec<IntersectionTerm>>, Error> {
    chern_classes_with_cap(d, oracle_cap())
}

pub fn chern_classes_with_cap(d: usize, cap: usize) -> Result<Vec<Vec<IntersectionTerm>>, Error> {
    check_cap(d, cap)?;
    Ok(elementary_symmetric(d)
        .into_iter()
        .skip(1)
        .map(|p| p.terms().collect())
        .collect())
}

/// e_0 = 1, e_1, ..., e_d of the Chern roots, by expanding the product
/// of the linear factors one root at a time.
fn elementary_symmetric(d: usize) -> Vec<IntersectionPoly> {
    let mut e: Vec<IntersectionPoly> = vec![IntersectionPoly::zero(); d + 1];
    e[0] = IntersectionPoly::one();
    for x in chern_roots(d) {
        for k in (1..=d).rev() {
            let bump = e[k - 1].mul(&x);
            e[k] = e[k].add(&bump);
        }
    }
    e
}

/// The d x d Porteous determinant, expanded by its first column:
/// D_n = sum_{k=1}^{n} (-1)^{k-1} c_k D_{n-k}, D_0 = 1.
fn determinant_expansion(c: &[IntersectionPoly], d: usize) -> IntersectionPoly {
    let mut det: Vec<IntersectionPoly> = Vec::with_capacity(d + 1);
    det.push(IntersectionPoly::one());
    for n in 1..=d {
        let mut acc = IntersectionPoly::zero();
        for k in 1..=n {
            let prod = c[k].mul(&det[n - k]);
            if k % 2 == 1 {
                acc = acc.add(&prod);
            } else {
                acc = acc.sub(&prod);
            }
        }
        det.push(acc);
    }
    det.pop().expect("nonempty")
}

/// Second route: the determinant equals the complete homogeneous sum
/// sum_{i_1 + ... + i_d = d} x_1^{i_1} ... x_d^{i_d} in the Chern roots.
fn complete_homogeneous(d: usize) -> IntersectionPoly {
    let roots = chern_roots(d);
    // powers[j][k] = x_j^k
    let powers: Vec<Vec<IntersectionPoly>> = roots
        .iter()
        .map(|x| {
            let mut row = vec![IntersectionPoly::one()];
            for k in 1..=d {
                row.push(row[k - 1].mul(x));
            }
            row
        })
        .collect();
    let mut acc = IntersectionPoly::zero();
    let mut exponents = vec![0usize; d];
    fn rec(
        t: usize,
        remaining: usize,
        exponents: &mut Vec<usize>,
        powers: &[Vec<IntersectionPoly>],
        acc: &mut IntersectionPoly,
    ) {
        if t == exponents.len() - 1 {
            exponents[t] = remaining;
            let mut prod = IntersectionPoly::one();
            for (j, &e) in exponents.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&powers[j][e]);
                }
            }
            *acc = acc.add(&prod);
            return;
        }
        for e in 0..=remaining {
            exponents[t] = e;
            rec(t + 1, remaining - e, exponents, powers, acc);
        }
    }
    rec(0, d, &mut exponents, &powers, &mut acc);
    acc
}

/// Reduce one degree-d monomial on C^d to a multiple of m^a gamma^b.
///
/// Each of the d curve factors is a union-find block; a diagonal D_{i,j}
/// merges the blocks of i and j when they differ and otherwise contributes
/// an excess factor -gamma together with a point class on its block; a line
/// class contributes a factor m and a point class. The monomial has nonzero
/// degree exactly when every block ends up carrying one point class.
fn reduce_monomial(mon: &Monomial, d: usize) -> Option<(u32, u32, bool)> {
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut root = v;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = v;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut points = vec![0u8; d];
    let mut gamma_pow = 0u32;
    let mut negative = false;
    for &(i, j, mult) in &mon.diagonals {
        for _ in 0..mult {
            let ri = find(&mut parent, i as usize - 1);
            let rj = find(&mut parent, j as usize - 1);
            if ri != rj {
                parent[rj] = ri;
                points[ri] += points[rj];
            } else {
                // excess intersection with the diagonal: one factor -gamma
                gamma_pow += 1;
                negative = !negative;
                points[ri] += 1;
            }
            if points[find(&mut parent, i as usize - 1)] >= 2 {
                return None;
            }
        }
    }
    let mut m_pow = 0u32;
    for &(j, mult) in &mon.lines {
        for _ in 0..mult {
            let r = find(&mut parent, j as usize - 1);
            points[r] += 1;
            if points[r] >= 2 {
                return None;
            }
            m_pow += 1;
        }
    }
    for v in 0..d {
        if find(&mut parent, v) == v && points[v] != 1 {
            return None;
        }
    }
    Some((m_pow, gamma_pow, negative))
}

fn reduce_poly(poly: &IntersectionPoly, d: usize) -> GmPolynomial {
    let mut out = GmPolynomial::zero();
    for (mon, coeff) in &poly.terms {
        if let Some((m_pow, gamma_pow, negative)) = reduce_monomial(mon, d) {
            let c = if negative { -coeff.clone() } else { coeff.clone() };
            out.add_term(m_pow, gamma_pow, c);
        }
    }
    out
}

fn porteous_cache() -> &'static Mutex<BTreeMap<usize, GmPolynomial>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, GmPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// The degree of the Porteous determinant on C^d as a polynomial in m and
/// gamma = 2g - 2; equals d! N_d(g, m) under evaluation.
///
/// For d <= 4 the determinant expansion is recomputed a second way, as the
/// complete homogeneous sum in the Chern roots, and the two expansions are
/// required to agree.
pub fn porteous_degree(d: usize) -> Result<GmPolynomial, Error> {
    porteous_degree_with_cap(d, oracle_cap())
}

pub fn porteous_degree_with_cap(d: usize, cap: usize) -> Result<GmPolynomial, Error> {
    check_cap(d, cap)?;
    if let Some(hit) = porteous_cache().lock().unwrap().get(&d) {
        return Ok(hit.clone());
    }
    if d == 0 {
        return Ok(GmPolynomial::one());
    }
    let c = elementary_symmetric(d);
    let det = determinant_expansion(&c, d);
    if d <= 4 {
        let h = complete_homogeneous(d);
        assert_eq!(
            det, h,
            "determinant and complete-homogeneous expansions disagree at d = {}",
            d
        );
    }
    let reduced = reduce_poly(&det, d);
    porteous_cache()
        .lock()
        .unwrap()
        .insert(d, reduced.clone());
    Ok(reduced)
}

/// N_d(g, m) by brute force: the reduced determinant degree evaluated at
/// (m, gamma = 2g - 2), divided by d!.
pub fn nd_oracle(d: usize, g: i64, m: i64) -> Result<Rational, Error> {
    nd_oracle_with_cap(d, g, m, oracle_cap())
}

pub fn nd_oracle_with_cap(d: usize, g: i64, m: i64, cap: usize) -> Result<Rational, Error> {
    let poly = porteous_degree_with_cap(d, cap)?;
    Ok(poly.eval(m, g) / factorial(d as u64))
}

/// The absolute values of the linear coefficients of the reduced
/// determinant degree: (|[m]|, |[gamma]|). Both carry the sign (-1)^{d-1};
/// their absolute values are binom(2d-1, d-1) (d-1)! and
/// (4^{d-1} - binom(2d-1, d-1)) (d-1)!. A mismatch is reported as an error,
/// not a panic.
pub fn lemma_coefficients(d: usize) -> Result<(Rational, Rational), Error> {
    lemma_coefficients_with_cap(d, oracle_cap())
}

pub fn lemma_coefficients_with_cap(d: usize, cap: usize) -> Result<(Rational, Rational), Error> {
    assert!(d >= 2, "lemma_coefficients needs d >= 2");
    let poly = porteous_degree_with_cap(d, cap)?;
    let m_coef = poly.coeff(1, 0);
    let gamma_coef = poly.coeff(0, 1);
    let sign = if d % 2 == 1 { rat(1) } else { rat(-1) };
    let fact = factorial(d as u64 - 1);
    let binom = binomial_int(2 * d as i64 - 1, d as u64 - 1);
    let expect_m = &sign * &binom * &fact;
    let expect_gamma = &sign * (pow4(d as u64 - 1) - &binom) * &fact;
    if m_coef != expect_m || gamma_coef != expect_gamma {
        return Err(Error::RouteMismatch {
            op: "lemma_coefficients",
            details: format!(
                "d = {}: oracle linear part ({})m + ({})γ, closed form ({})m + ({})γ",
                d,
                exact_str(&m_coef),
                exact_str(&gamma_coef),
                exact_str(&expect_m),
                exact_str(&expect_gamma)
            ),
        });
    }
    Ok((m_coef.abs(), gamma_coef.abs()))
}

/// Coefficients, for n = 1..=cap, of log(sum_d (P_d / d!) z^d) where P_d is
/// the reduced determinant degree. Every coefficient collapses to a linear
/// form in m and gamma.
pub fn connected_log_coefficients(cap: usize) -> Result<Vec<GmPolynomial>, Error> {
    let mut f = vec![GmPolynomial::one()];
    for d in 1..=cap {
        f.push(porteous_degree_with_cap(d, cap)?.scale(&(Rational::one() / factorial(d as u64))));
    }
    let mut log: Vec<GmPolynomial> = vec![GmPolynomial::zero(); cap + 1];
    for n in 1..=cap {
        let mut acc = f[n].clone();
        for k in 1..n {
            let prod = log[k].mul(&f[n - k]).scale(&frac_u(k as i64, n as i64));
            acc = acc.add(&prod.scale(&rat(-1)));
        }
        log[n] = acc;
    }
    Ok(log.split_off(1))
}

fn frac_u(p: i64, q: i64) -> Rational {
    rat(p) / rat(q)
}

/// The closed linear form that the n-th log coefficient must equal:
/// (-1)^{n-1}/n [binom(2n-1, n-1) m + (4^{n-1} - binom(2n-1, n-1)) gamma].
pub fn connected_log_closed_form(n: usize) -> GmPolynomial {
    let sign_over_n = if n % 2 == 1 {
        Rational::one() / rat(n as i64)
    } else {
        -Rational::one() / rat(n as i64)
    };
    let binom = binomial_int(2 * n as i64 - 1, n as u64 - 1);
    let mut p = GmPolynomial::zero();
    p.add_term(1, 0, &sign_over_n * &binom);
    p.add_term(0, 1, &sign_over_n * (pow4(n as u64 - 1) - &binom));
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::nd_acgh;

    fn poly_from_terms(terms: &[(i64, &[(u8, u8, u8)], &[(u8, u8)])]) -> IntersectionPoly {
        let mut p = IntersectionPoly::zero();
        for &(c, diags, lines) in terms {
            let mon = Monomial {
                diagonals: diags.to_vec(),
                lines: lines.to_vec(),
            };
            p.add_term(mon, rat(c));
        }
        p
    }

    #[test]
    fn chern_classes_for_one_and_two_points() {
        let c = chern_classes(1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].len(), 1);
        assert_eq!(c[0][0].monomial, Monomial::line(1));
        assert_eq!(c[0][0].coefficient, rat(1));

        let c = chern_classes(2).unwrap();
        // c_1 = l_1 + l_2 - D_{1,2}
        let c1 = poly_from_terms(&[
            (1, &[], &[(1, 1)]),
            (1, &[], &[(2, 1)]),
            (-1, &[(1, 2, 1)], &[]),
        ]);
        assert_eq!(c[0], c1.terms().collect::<Vec<_>>());
        // c_2 = l_1 l_2 - l_1 D_{1,2}
        let c2 = poly_from_terms(&[
            (1, &[], &[(1, 1), (2, 1)]),
            (-1, &[(1, 2, 1)], &[(1, 1)]),
        ]);
        assert_eq!(c[1], c2.terms().collect::<Vec<_>>());
    }

    #[test]
    fn chern_class_top_for_three_points_contains_root_product() {
        // c_3 = x_1 x_2 x_3 expands l_1 (l_2 - D_{1,2}) (l_3 - D_{1,3} - D_{2,3}).
        let c = chern_classes(3).unwrap();
        let top = &c[2];
        let hand = poly_from_terms(&[
            (1, &[], &[(1, 1), (2, 1), (3, 1)]),
            (-1, &[(1, 3, 1)], &[(1, 1), (2, 1)]),
            (-1, &[(2, 3, 1)], &[(1, 1), (2, 1)]),
            (-1, &[(1, 2, 1)], &[(1, 1), (3, 1)]),
            (1, &[(1, 2, 1), (1, 3, 1)], &[(1, 1)]),
            (1, &[(1, 2, 1), (2, 3, 1)], &[(1, 1)]),
        ]);
        assert_eq!(top, &hand.terms().collect::<Vec<_>>());
    }

    #[test]
    fn porteous_degree_small_cases() {
        let p1 = porteous_degree(1).unwrap();
        let mut expect = GmPolynomial::zero();
        expect.add_term(1, 0, rat(1));
        assert_eq!(p1, expect);

        // d = 2: m^2 - 3m - gamma, by hand reduction.
        let p2 = porteous_degree(2).unwrap();
        let mut expect = GmPolynomial::zero();
        expect.add_term(2, 0, rat(1));
        expect.add_term(1, 0, rat(-3));
        expect.add_term(0, 1, rat(-1));
        assert_eq!(p2, expect);
        assert_eq!(p2.to_string(), "m^2 - 3m - γ");
    }

    #[test]
    fn oracle_matches_closed_form_on_grid() {
        for d in 0..=4usize {
            for g in 0..=5 {
                for m in 1..=9 {
                    assert_eq!(
                        nd_oracle(d, g, m).unwrap(),
                        nd_acgh(d as i64, g, m),
                        "d = {}, g = {}, m = {}",
                        d,
                        g,
                        m
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_classical_values() {
        assert_eq!(nd_oracle(2, 0, 4).unwrap(), rat(3));
        assert_eq!(nd_oracle(3, 0, 4).unwrap(), rat(0));
        assert_eq!(nd_oracle(2, 3, 6).unwrap(), rat(7));
    }

    #[test]
    fn leading_coefficient_and_total_degree() {
        for d in 1..=5usize {
            let p = porteous_degree(d).unwrap();
            assert_eq!(p.total_degree(), d as u32);
            assert_eq!(p.coeff(d as u32, 0), rat(1), "leading m-coefficient at d = {}", d);
        }
    }

    #[test]
    fn lemma_coefficient_values() {
        assert_eq!(lemma_coefficients(2).unwrap(), (rat(3), rat(1)));
        assert_eq!(lemma_coefficients(3).unwrap(), (rat(20), rat(12)));
        assert_eq!(lemma_coefficients(4).unwrap(), (rat(210), rat(174)));
    }

    #[test]
    fn cap_is_enforced() {
        let err = porteous_degree_with_cap(7, 6).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(err.to_string().contains("SECANT_ORACLE_CAP"));
    }

    #[test]
    fn log_coefficients_are_the_connected_linear_forms() {
        let logs = connected_log_coefficients(4).unwrap();
        for (idx, actual) in logs.iter().enumerate() {
            let n = idx + 1;
            assert_eq!(actual, &connected_log_closed_form(n), "n = {}", n);
        }
    }

    #[test]
    fn display_renders_mixed_terms() {
        let mut p = GmPolynomial::zero();
        p.add_term(1, 1, rat(-4));
        p.add_term(2, 0, rat(1));
        p.add_term(0, 0, frac_u(1, 2));
        assert_eq!(p.to_string(), "m^2 - 4mγ + 1/2");
    }
}
