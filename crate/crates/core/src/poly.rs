//! Exact sparse polynomials in `x_1..x_n` with coefficients in `Z[β]`, and
//! the divided-difference / Demazure / Demazure–Lascoux operator calculus.

use crate::error::Error;
use crate::perm::{sorting_permutation, Perm};
use crate::shape::{Partition, WeakComposition};
use crate::tableaux::enumerate_svt;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// One monomial key: `β^beta * x^xs`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Term {
    pub beta: u32,
    pub xs: Vec<u32>,
}

/// A sparse polynomial in `x_1..x_n` over `Z[β]`.
///
/// No zero coefficients are stored; the term map keeps a canonical order so
/// serialization and printing are stable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaPolynomial {
    n: usize,
    terms: BTreeMap<Term, BigInt>,
}

impl BetaPolynomial {
    pub fn zero(n: usize) -> Self {
        BetaPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, &vec![0; n], BigInt::one())
    }

    /// `coeff * β^beta * x^exps`.
    pub fn monomial(n: usize, beta: u32, exps: &[u32], coeff: BigInt) -> Self {
        assert_eq!(exps.len(), n);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Term { beta, xs: exps.to_vec() }, coeff);
        }
        BetaPolynomial { n, terms }
    }

    /// `x^a` for a weak composition `a` (padded/truncated checks are the
    /// caller's business; lengths must match).
    pub fn x_power(n: usize, a: &WeakComposition) -> Self {
        assert_eq!(a.len(), n);
        let exps: Vec<u32> = a.entries().iter().map(|&e| e as u32).collect();
        Self::monomial(n, 0, &exps, BigInt::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, beta: u32, exps: &[u32]) -> BigInt {
        self.terms.get(&Term { beta, xs: exps.to_vec() }).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, term: Term, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(term) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Swaps the variables `x_i` and `x_{i+1}` (1-based `i`).
    pub fn swap_vars(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            let mut xs = t.xs.clone();
            xs.swap(i - 1, i);
            out.add_term(Term { beta: t.beta, xs }, c.clone());
        }
        Ok(out)
    }

    /// Multiplies by `β`.
    pub fn mul_beta(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            out.add_term(Term { beta: t.beta + 1, xs: t.xs.clone() }, c.clone());
        }
        out
    }

    /// Multiplies by `x_j` (1-based).
    pub fn mul_x(&self, j: usize) -> Self {
        assert!(j >= 1 && j <= self.n);
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            let mut xs = t.xs.clone();
            xs[j - 1] += 1;
            out.add_term(Term { beta: t.beta, xs }, c.clone());
        }
        out
    }

    /// Sets `β = 0`: keeps only β-degree-zero terms.
    pub fn beta_zero(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            if t.beta == 0 {
                out.add_term(t.clone(), c.clone());
            }
        }
        out
    }

    /// True if invariant under every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i).map(|p| p == *self).unwrap_or(false))
    }

    /// Default rendering: terms sorted by (total x-degree, exponent vector,
    /// β-degree), β printed as `b`.
    pub fn render(&self) -> String {
        self.render_with(RenderStyle { beta_symbol: "b", degrevlex_desc: false })
    }

    /// Appendix-style rendering: β printed as `q`, terms in descending
    /// degree-reverse-lexicographic order of the x-monomials.
    pub fn render_sage(&self) -> String {
        self.render_with(RenderStyle { beta_symbol: "q", degrevlex_desc: true })
    }

    /// Canonical term list for machine comparison:
    /// `[{"beta": k, "xs": [...], "coeff": "c"}, ...]` in map order.
    pub fn to_json_terms(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(t, c)| {
                serde_json::json!({ "beta": t.beta, "xs": t.xs, "coeff": c.to_string() })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    fn render_with(&self, style: RenderStyle) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut items: Vec<(&Term, &BigInt)> = self.terms.iter().collect();
        if style.degrevlex_desc {
            items.sort_by(|(a, _), (b, _)| degrevlex(&b.xs, &a.xs).then(a.beta.cmp(&b.beta)));
        } else {
            items.sort_by(|(a, _), (b, _)| {
                let da: u32 = a.xs.iter().sum();
                let db: u32 = b.xs.iter().sum();
                da.cmp(&db).then(a.xs.cmp(&b.xs)).then(a.beta.cmp(&b.beta))
            });
        }
        let mut s = String::new();
        for (k, (t, c)) in items.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (t.beta == 0 && t.xs.iter().all(|&e| e == 0)) {
                factors.push(mag.to_string());
            }
            if t.beta == 1 {
                factors.push(style.beta_symbol.to_string());
            } else if t.beta > 1 {
                factors.push(format!("{}^{}", style.beta_symbol, t.beta));
            }
            for (j, &e) in t.xs.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", j + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", j + 1, e));
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

struct RenderStyle {
    beta_symbol: &'static str,
    degrevlex_desc: bool,
}

/// Degree-reverse-lexicographic comparison: higher total degree first; ties
/// broken so that the last nonzero entry of the difference is negative for
/// the larger monomial.
fn degrevlex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for j in (0..a.len()).rev() {
        match a[j].cmp(&b[j]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        let terms = self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect();
        BetaPolynomial { n: self.n, terms }
    }
}

impl Mul for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        assert_eq!(self.n, rhs.n);
        let mut out = BetaPolynomial::zero(self.n);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                let xs = ta.xs.iter().zip(&tb.xs).map(|(a, b)| a + b).collect();
                out.add_term(Term { beta: ta.beta + tb.beta, xs }, ca * cb);
            }
        }
        out
    }
}

/// Newton divided difference `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
///
/// Computed term-by-term from the closed form of `∂_i x^a`, so the division
/// is exact by construction.
pub fn divided_difference(f: &BetaPolynomial, i: usize) -> Result<BetaPolynomial> {
    if i == 0 || i >= f.n() {
        return Err(Error::IndexOutOfRange { index: i, n: f.n() });
    }
    let mut out = BetaPolynomial::zero(f.n());
    for (t, c) in f.terms() {
        let p = t.xs[i - 1];
        let q = t.xs[i];
        if p == q {
            continue;
        }
        let (lo, hi, sign) = if p > q { (q, p, 1) } else { (p, q, -1) };
        for j in lo..hi {
            let mut xs = t.xs.clone();
            xs[i - 1] = j;
            xs[i] = lo + hi - 1 - j;
            let coeff = if sign > 0 { c.clone() } else { -c };
            out.add_term(Term { beta: t.beta, xs }, coeff);
        }
    }
    Ok(out)
}

/// Demazure operator `π_i f = ∂_i(x_i · f)`.
pub fn demazure(f: &BetaPolynomial, i: usize) -> Result<BetaPolynomial> {
    divided_difference(&f.mul_x(i), i)
}

/// Demazure–Lascoux operator `ϖ_i f = π_i((1 + β x_{i+1}) · f)`.
///
/// With `beta_on = false` the β part is dropped and this is the plain
/// Demazure operator.
pub fn demazure_lascoux(f: &BetaPolynomial, i: usize, beta_on: bool) -> Result<BetaPolynomial> {
    if !beta_on {
        return demazure(f, i);
    }
    if i >= f.n() {
        return Err(Error::IndexOutOfRange { index: i, n: f.n() });
    }
    let g = f + &f.mul_x(i + 1).mul_beta();
    demazure(&g, i)
}

/// Which operator family a word application uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    Newton,
    Demazure,
    DemazureLascoux,
}

/// A word in the simple transpositions `s_1, ..., s_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// The permutation `s_{i_1} ... s_{i_k}` of `S_n`.
    pub fn permutation(&self, n: usize) -> Perm {
        let mut w = Perm::identity(n);
        for &i in &self.0 {
            w = w.mul_s_right(i);
        }
        w
    }

    /// True when the word length equals the Coxeter length of its product.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.permutation(n).length() == self.0.len()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Applies `op_{i_1} ∘ op_{i_2} ∘ ... ∘ op_{i_k}` to `f`, i.e. the rightmost
/// letter acts first, matching `∂_w := ∂_{s_1} ∂_{s_2} ... ∂_{s_k}` for a
/// word `s_1 s_2 ... s_k`.
pub fn apply_word(f: &BetaPolynomial, word: &ReducedWord, kind: OperatorKind) -> Result<BetaPolynomial> {
    let mut g = f.clone();
    for &i in word.letters().iter().rev() {
        g = match kind {
            OperatorKind::Newton => divided_difference(&g, i)?,
            OperatorKind::Demazure => demazure(&g, i)?,
            OperatorKind::DemazureLascoux => demazure_lascoux(&g, i, true)?,
        };
    }
    Ok(g)
}

/// Key polynomial `κ_a = π_{w(a)} x^{sort(a)}` in `a.len()` variables.
pub fn key_polynomial(a: &WeakComposition) -> Result<BetaPolynomial> {
    lascoux_like(a, OperatorKind::Demazure)
}

/// Lascoux polynomial `L_a = ϖ_{w(a)} x^{sort(a)}` in `a.len()` variables.
pub fn lascoux_polynomial(a: &WeakComposition) -> Result<BetaPolynomial> {
    lascoux_like(a, OperatorKind::DemazureLascoux)
}

fn lascoux_like(a: &WeakComposition, kind: OperatorKind) -> Result<BetaPolynomial> {
    let n = a.len();
    let sorted = a.sort_decreasing().to_composition(n);
    let x = BetaPolynomial::x_power(n, &sorted);
    let word = ReducedWord(sorting_permutation(a).reduced_word());
    apply_word(&x, &word, kind)
}

/// `G_λ(x_1..x_n; β) = Σ_T β^excess(T) x^wt(T)` over `svssyt^n(λ)`.
pub fn grothendieck_from_tableaux(shape: &Partition, n: u8) -> BetaPolynomial {
    let mut out = BetaPolynomial::zero(n as usize);
    for t in enumerate_svt(shape, n, None) {
        let exps: Vec<u32> = t.weight().entries().iter().map(|&e| e as u32).collect();
        out.add_term(Term { beta: t.excess() as u32, xs: exps }, BigInt::one());
    }
    out
}

/// `s_λ(x_1..x_n) = Σ_T x^wt(T)` over the excess-0 tableaux.
pub fn schur_from_tableaux(shape: &Partition, n: u8) -> BetaPolynomial {
    let mut out = BetaPolynomial::zero(n as usize);
    for t in enumerate_svt(shape, n, Some(0)) {
        let exps: Vec<u32> = t.weight().entries().iter().map(|&e| e as u32).collect();
        out.add_term(Term { beta: 0, xs: exps }, BigInt::one());
    }
    out
}
