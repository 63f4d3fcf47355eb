//! Schur expansions of Grothendieck polynomials, flagged increasing tableau
//! coefficients, the uncrowding bijection, and the single-row isomorphisms.

use crate::crystal::CrystalGraph;
use crate::error::Error;
use crate::poly::{grothendieck_from_tableaux, schur_from_tableaux, BetaPolynomial};
use crate::shape::{Partition, SkewShape};
use crate::tableaux::{
    enumerate_flagged_increasing, FlaggedIncreasingTableau, SetValuedTableau,
};
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Multiplicities `M_λ^μ` of the expansion `G_λ = Σ_μ β^{|μ|-|λ|} M_λ^μ s_μ`.
#[derive(Clone, Debug)]
pub struct ExpansionTable {
    pub lambda: Partition,
    pub n: u8,
    pub multiplicities: BTreeMap<Partition, usize>,
}

impl ExpansionTable {
    pub fn multiplicity(&self, mu: &Partition) -> usize {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }

    /// Reassembles `Σ_μ β^{|μ|-|λ|} M_λ^μ s_μ` as a polynomial.
    pub fn to_polynomial(&self) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero(self.n as usize);
        for (mu, &m) in &self.multiplicities {
            let beta_power = (mu.size() - self.lambda.size()) as u32;
            let s = schur_from_tableaux(mu, self.n);
            let mut scaled = BetaPolynomial::zero(self.n as usize);
            for _ in 0..m {
                scaled = &scaled + &s;
            }
            for _ in 0..beta_power {
                scaled = scaled.mul_beta();
            }
            out = &out + &scaled;
        }
        out
    }
}

/// Counts highest-weight (Yamanouchi) set-valued tableaux per weight.
pub fn schur_expansion(shape: &Partition, n: u8) -> Result<ExpansionTable> {
    let graph = CrystalGraph::build(shape, n, false)?;
    let mut multiplicities: BTreeMap<Partition, usize> = BTreeMap::new();
    for comp in graph.components()? {
        let mu = graph.nodes()[comp.highest].weight().sort_decreasing();
        *multiplicities.entry(mu).or_insert(0) += 1;
    }
    Ok(ExpansionTable { lambda: shape.clone(), n, multiplicities })
}

/// Lenart's coefficient: the number of flagged increasing tableaux of shape
/// `μ/λ`.
pub fn lenart_coefficient(lambda: &Partition, mu: &Partition) -> Result<usize> {
    let shape = SkewShape::new(mu.clone(), lambda.clone())?;
    Ok(enumerate_flagged_increasing(&shape).len())
}

/// All `μ ⊇ λ` that can support a flagged increasing tableau of shape `μ/λ`
/// with at most `max_rows` rows: `μ_1 = λ_1`, and row `r` (0-based) adds at
/// most `r` boxes since its entries are distinct values in `1..=r`.
pub fn lenart_support(lambda: &Partition, max_rows: usize) -> Vec<Partition> {
    if lambda.is_empty() {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut prefix = vec![lambda.part(0)];
    fn rec(lambda: &Partition, max_rows: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if prefix.len() >= lambda.rows() {
            out.push(Partition::new(prefix.clone()).expect("built weakly decreasing"));
        }
        let r = prefix.len();
        if r >= max_rows {
            return;
        }
        let hi = prefix[r - 1].min(lambda.part(r) + r);
        let lo = lambda.part(r).max(1);
        for len in lo..=hi {
            prefix.push(len);
            rec(lambda, max_rows, prefix, out);
            prefix.pop();
        }
    }
    rec(lambda, max_rows, &mut prefix, &mut out);
    out.sort();
    out.dedup();
    out
}

/// RSK row insertion of `x` into an all-singleton tableau; returns the new
/// tableau and the coordinates of the added box.
pub fn rsk_row_insert(p: &SetValuedTableau, x: u8) -> Result<(SetValuedTableau, (usize, usize))> {
    if !p.is_ssyt() {
        return Err(Error::InvalidTableau("RSK operates on singleton cells".into()));
    }
    let mut rows: Vec<Vec<u8>> = p.rows().iter().map(|r| r.iter().map(|c| c[0]).collect()).collect();
    let cell = row_insert(&mut rows, x);
    Ok((ssyt_from_rows(rows, p.n()), cell))
}

fn row_insert(rows: &mut Vec<Vec<u8>>, x: u8) -> (usize, usize) {
    let mut carry = x;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![carry]);
            return (r, 0);
        }
        match rows[r].iter().position(|&y| y > carry) {
            None => {
                rows[r].push(carry);
                return (r, rows[r].len() - 1);
            }
            Some(c) => {
                std::mem::swap(&mut rows[r][c], &mut carry);
                r += 1;
            }
        }
    }
}

fn ssyt_from_rows(rows: Vec<Vec<u8>>, n: u8) -> SetValuedTableau {
    let shape = Partition::new(rows.iter().map(|r| r.len()).collect::<Vec<_>>())
        .expect("insertion keeps partition shape");
    let cells = rows.into_iter().map(|r| r.into_iter().map(|v| vec![v]).collect()).collect();
    SetValuedTableau::from_parts_unchecked(shape, n, cells)
}

/// Splits a single-row set-valued tableau into the pair `row ⊗ column`:
/// the maxima of the first `s - 1` cells form the row, everything else reads
/// down the column.
pub fn phi_single_row(t: &SetValuedTableau) -> Result<(Vec<u8>, Vec<u8>)> {
    if t.shape().rows() > 1 {
        return Err(Error::InvalidTableau("phi_single_row needs a single-row shape".into()));
    }
    let cells = if t.shape().rows() == 0 { &[] as &[Vec<u8>] } else { &t.rows()[0][..] };
    let s = cells.len();
    let mut row = Vec::new();
    let mut col = Vec::new();
    for (k, cell) in cells.iter().enumerate() {
        if k + 1 < s {
            row.push(*cell.last().unwrap());
            col.extend(cell[..cell.len() - 1].iter().copied());
        } else {
            col.extend(cell.iter().copied());
        }
    }
    Ok((row, col))
}

/// Inverse of [`phi_single_row`]: distributes the column entries among the
/// row entries by `c_{i_j} < r_j <= c_{i_j + 1}`.
pub fn phi_single_row_inverse(row: &[u8], col: &[u8], n: u8) -> Result<SetValuedTableau> {
    let s = row.len() + 1;
    let mut cells: Vec<Vec<u8>> = Vec::with_capacity(s);
    let mut pos = 0usize;
    for &r in row.iter() {
        let mut cell = Vec::new();
        while pos < col.len() && col[pos] < r {
            cell.push(col[pos]);
            pos += 1;
        }
        cell.push(r);
        cells.push(cell);
    }
    let last: Vec<u8> = col[pos..].to_vec();
    if last.is_empty() {
        return Err(Error::InvalidTableau("last cell of the row factor is empty".into()));
    }
    cells.push(last);
    SetValuedTableau::new(Partition::new(vec![s])?, n, vec![cells])
}

/// Hook-shape image `Ψ_μ(T)` of a single-row tableau: minima across the row,
/// remaining entries down the first column.
pub fn psi_hook(t: &SetValuedTableau) -> Result<SetValuedTableau> {
    if t.shape().rows() > 1 {
        return Err(Error::InvalidTableau("psi_hook needs a single-row shape".into()));
    }
    if t.shape().rows() == 0 {
        return Ok(t.clone());
    }
    let cells = &t.rows()[0];
    let s = cells.len();
    let top: Vec<u8> = cells.iter().map(|c| c[0]).collect();
    let mut column: Vec<u8> = Vec::new();
    for cell in cells {
        column.extend(cell[1..].iter().copied());
    }
    let mut rows: Vec<Vec<u8>> = vec![top];
    for v in column {
        rows.push(vec![v]);
    }
    let mut shape_parts = vec![s];
    shape_parts.extend(std::iter::repeat_n(1, rows.len() - 1));
    let cells = rows.into_iter().map(|r| r.into_iter().map(|v| vec![v]).collect()).collect();
    SetValuedTableau::new(Partition::new(shape_parts)?, t.n(), cells)
}

/// Uncrowding bijection `ψ : svssyt^n(λ) → B(μ) × F_{μ/λ}`.
///
/// Recursive over rows, bottom to top: the top row splits as `r ⊗ c` and is
/// row-inserted into the image of the remaining rows (letters of `r` first,
/// then the column letters bottom to top); the flagged recording tableau
/// shifts down one row, new boxes in row `i + 1` recording an `i`.
pub fn uncrowd(t: &SetValuedTableau) -> Result<(SetValuedTableau, FlaggedIncreasingTableau)> {
    let lam = t.shape().clone();
    let n = t.n();
    if lam.rows() == 0 {
        let s = SetValuedTableau::new(Partition::empty(), n, Vec::new())?;
        let f = FlaggedIncreasingTableau::empty(SkewShape::new(Partition::empty(), Partition::empty())?)?;
        return Ok((s, f));
    }
    let lower_shape = Partition::new(lam.parts()[1..].to_vec())?;
    let lower = SetValuedTableau::new(lower_shape, n, t.rows()[1..].to_vec())?;
    let (s_lower, f_lower) = uncrowd(&lower)?;

    let top = SetValuedTableau::new(Partition::new(vec![lam.part(0)])?, n, vec![t.rows()[0].clone()])?;
    let (r, c) = phi_single_row(&top)?;
    let mut rows: Vec<Vec<u8>> =
        s_lower.rows().iter().map(|row| row.iter().map(|cell| cell[0]).collect()).collect();
    for &x in &r {
        row_insert(&mut rows, x);
    }
    for &x in c.iter().rev() {
        row_insert(&mut rows, x);
    }
    let s = ssyt_from_rows(rows, n);
    let mu = s.shape().clone();

    if mu.part(0) != lam.part(0) {
        return Err(Error::msg(format!("uncrowding: top row grew, {} vs {}", mu.part(0), lam.part(0))));
    }
    let mut f_rows: Vec<Vec<u8>> = vec![Vec::new()];
    for i in 0..mu.rows().saturating_sub(1) {
        let mut row = if i < f_lower.rows.len() { f_lower.rows[i].clone() } else { Vec::new() };
        let want = mu.part(i + 1) - lam.part(i + 1);
        if want == row.len() + 1 {
            row.push((i + 1) as u8);
        } else if want != row.len() {
            return Err(Error::msg(format!(
                "uncrowding: row {} of the recording tableau gained {} boxes",
                i + 2,
                want as isize - row.len() as isize
            )));
        }
        f_rows.push(row);
    }
    let f = FlaggedIncreasingTableau::new(SkewShape::new(mu, lam)?, f_rows)?;
    Ok((s, f))
}

/// Crystal operator on the `row ⊗ column` tensor pair used by the single-row
/// isomorphism; `row` is the left (outer) factor.
pub fn pair_f(row: &[u8], col: &[u8], i: u8, n: u8) -> Option<(Vec<u8>, Vec<u8>)> {
    let eps_row = row.iter().filter(|&&v| v == i + 1).count();
    let phi_col = usize::from(col.contains(&i) && !col.contains(&(i + 1)));
    if eps_row >= phi_col {
        let phi_row = row.iter().filter(|&&v| v == i).count();
        if phi_row == 0 {
            return None;
        }
        let mut row = row.to_vec();
        let last = row.iter().rposition(|&v| v == i).unwrap();
        row[last] = i + 1;
        Some((row, col.to_vec()))
    } else {
        if phi_col == 0 || i + 1 > n {
            return None;
        }
        let mut col = col.to_vec();
        let pos = col.iter().position(|&v| v == i).unwrap();
        col[pos] = i + 1;
        Some((row.to_vec(), col))
    }
}

/// Raising operator on the tensor pair, inverse to [`pair_f`].
pub fn pair_e(row: &[u8], col: &[u8], i: u8) -> Option<(Vec<u8>, Vec<u8>)> {
    let eps_row = row.iter().filter(|&&v| v == i + 1).count();
    let phi_col = usize::from(col.contains(&i) && !col.contains(&(i + 1)));
    if eps_row > phi_col {
        let mut row = row.to_vec();
        let first = row.iter().position(|&v| v == i + 1).unwrap();
        row[first] = i;
        Some((row, col.to_vec()))
    } else {
        if !(col.contains(&(i + 1)) && !col.contains(&i)) {
            return None;
        }
        let mut col = col.to_vec();
        let pos = col.iter().position(|&v| v == i + 1).unwrap();
        col[pos] = i;
        Some((row.to_vec(), col))
    }
}

/// Checks the single-box Pieri rule `G_1 · G_λ = Σ_ν β^{|ν/λ|-1} G_ν`, the
/// sum running over all ways of adding a nonempty set of addable corners
/// within `n` rows.
pub fn pieri_check(shape: &Partition, n: u8) -> Result<bool> {
    let lhs = &grothendieck_from_tableaux(&Partition::new(vec![1])?, n)
        * &grothendieck_from_tableaux(shape, n);
    let corners: Vec<(usize, usize)> =
        shape.addable_corners().into_iter().filter(|&(r, _)| r < n as usize).collect();
    let mut rhs = BetaPolynomial::zero(n as usize);
    for mask in 1u32..(1 << corners.len()) {
        let rows: Vec<usize> = corners
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(r, _))| r)
            .collect();
        let nu = shape.with_corners_added(&rows)?;
        let mut g = grothendieck_from_tableaux(&nu, n);
        for _ in 1..rows.len() {
            g = g.mul_beta();
        }
        rhs = &rhs + &g;
    }
    Ok(lhs == rhs)
}

/// Checks the vertical-strip Pieri rule
/// `G_{1^ℓ} · G_λ = Σ_ν β^{|ν/λ|-ℓ} C(c(ν/λ)-1, |ν/λ|-ℓ) G_ν`.
pub fn pieri_check_general(shape: &Partition, ell: usize, n: u8) -> Result<bool> {
    let column = Partition::new(vec![1; ell])?;
    let lhs = &grothendieck_from_tableaux(&column, n) * &grothendieck_from_tableaux(shape, n);
    let mut rhs = BetaPolynomial::zero(n as usize);
    // Vertical strips: each row gains at most one box.
    let rows_bound = n as usize;
    for mask in 1u64..(1 << rows_bound) {
        let rows: Vec<usize> = (0..rows_bound).filter(|r| mask >> r & 1 == 1).collect();
        let mut parts = shape.parts().to_vec();
        parts.resize(rows_bound, 0);
        for &r in &rows {
            parts[r] += 1;
        }
        let Ok(nu) = Partition::new(parts) else { continue };
        let strip = SkewShape::new(nu.clone(), shape.clone())?;
        if !strip.is_vertical_strip() {
            continue;
        }
        let m = strip.size();
        if m < ell {
            continue;
        }
        let cols = strip.column_count();
        let coeff = binomial(cols - 1, m - ell);
        if coeff == 0 {
            continue;
        }
        let mut g = grothendieck_from_tableaux(&nu, n);
        let mut scaled = BetaPolynomial::zero(n as usize);
        for _ in 0..coeff {
            scaled = &scaled + &g;
        }
        for _ in 0..(m - ell) {
            scaled = scaled.mul_beta();
        }
        g = scaled;
        rhs = &rhs + &g;
    }
    Ok(lhs == rhs)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    let q = num / den;
    q.try_into().expect("binomial fits usize")
}
