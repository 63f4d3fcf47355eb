//! Set-valued tableaux, increasing tableaux, and their enumeration.

use crate::error::Error;
use crate::shape::{Partition, SkewShape, WeakComposition};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A semistandard set-valued tableau of straight shape.
///
/// Every cell holds a nonempty set of integers in `1..=n`, stored sorted
/// ascending. For a cell `A` with `B` to its right and `C` below,
/// `max A <= min B` and `max A < min C`. A tableau with all cells singletons
/// is an ordinary semistandard tableau.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SvtRepr", into = "SvtRepr")]
pub struct SetValuedTableau {
    shape: Partition,
    n: u8,
    cells: Vec<Vec<Vec<u8>>>,
}

/// JSON wire form: `{"shape":[...], "n":k, "cells":[[[ints]]]}`.
#[derive(Serialize, Deserialize)]
struct SvtRepr {
    shape: Vec<usize>,
    n: u8,
    cells: Vec<Vec<Vec<u8>>>,
}

impl TryFrom<SvtRepr> for SetValuedTableau {
    type Error = Error;
    fn try_from(r: SvtRepr) -> Result<Self> {
        SetValuedTableau::new(Partition::new(r.shape)?, r.n, r.cells)
    }
}

impl From<SetValuedTableau> for SvtRepr {
    fn from(t: SetValuedTableau) -> SvtRepr {
        SvtRepr { shape: t.shape.parts().to_vec(), n: t.n, cells: t.cells }
    }
}

impl SetValuedTableau {
    pub fn new(shape: Partition, n: u8, cells: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        let mut cells = cells;
        for row in &mut cells {
            for cell in row.iter_mut() {
                cell.sort_unstable();
                cell.dedup();
            }
        }
        let t = SetValuedTableau { shape, n, cells };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tableau from rows of cells without re-sorting; panics in debug
    /// builds if invalid. Internal fast path for the crystal operators.
    pub(crate) fn from_parts_unchecked(shape: Partition, n: u8, cells: Vec<Vec<Vec<u8>>>) -> Self {
        let t = SetValuedTableau { shape, n, cells };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t}");
        t
    }

    /// The highest-weight filling: row `r` (0-based) filled with `r + 1`.
    pub fn highest_weight(shape: &Partition, n: u8) -> Result<Self> {
        if shape.rows() > n as usize {
            return Err(Error::InvalidTableau(format!(
                "shape {shape} has more than n = {n} rows"
            )));
        }
        let cells = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![vec![r as u8 + 1]; len])
            .collect();
        Ok(SetValuedTableau { shape: shape.clone(), n, cells })
    }

    pub fn validate(&self) -> Result<()> {
        let err = |msg: String| Err(Error::InvalidTableau(msg));
        if self.cells.len() != self.shape.rows() {
            return err(format!("expected {} rows, got {}", self.shape.rows(), self.cells.len()));
        }
        for (r, row) in self.cells.iter().enumerate() {
            if row.len() != self.shape.part(r) {
                return err(format!("row {r} has {} cells, shape wants {}", row.len(), self.shape.part(r)));
            }
            for (c, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return err(format!("cell ({r},{c}) is empty"));
                }
                if cell.windows(2).any(|w| w[0] >= w[1]) {
                    return err(format!("cell ({r},{c}) is not strictly increasing"));
                }
                if *cell.last().unwrap() > self.n || cell[0] == 0 {
                    return err(format!("cell ({r},{c}) has entries outside 1..={}", self.n));
                }
                if c > 0 && row[c - 1].last().unwrap() > &cell[0] {
                    return err(format!("row condition fails at ({r},{c})"));
                }
                if r > 0 && c < self.cells[r - 1].len() && self.cells[r - 1][c].last().unwrap() >= &cell[0] {
                    return err(format!("column condition fails at ({r},{c})"));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Vec<u8>>] {
        &self.cells
    }

    pub fn cell(&self, r: usize, c: usize) -> &[u8] {
        &self.cells[r][c]
    }

    /// Number of entries beyond one per box; the β-degree of the tableau's
    /// monomial.
    pub fn excess(&self) -> usize {
        self.cells.iter().flatten().map(|cell| cell.len() - 1).sum()
    }

    pub fn is_ssyt(&self) -> bool {
        self.cells.iter().flatten().all(|cell| cell.len() == 1)
    }

    /// True if some cell contains `v`.
    pub fn contains(&self, v: u8) -> bool {
        self.cells.iter().flatten().any(|cell| cell.contains(&v))
    }

    pub fn max_entry(&self) -> Option<u8> {
        self.cells.iter().flatten().filter_map(|c| c.last().copied()).max()
    }

    /// Weight in the ε-basis: entry `i` counts cells containing `i + 1`.
    pub fn weight(&self) -> WeakComposition {
        let mut w = vec![0usize; self.n as usize];
        for cell in self.cells.iter().flatten() {
            for &v in cell {
                w[v as usize - 1] += 1;
            }
        }
        WeakComposition::new(w)
    }

    /// Canonical string: rows joined by `/`, cells by `,`, multi-entry cells
    /// braced, e.g. `1,{1,2}/3`.
    pub fn id_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        if cell.len() == 1 {
                            cell[0].to_string()
                        } else {
                            let s: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
                            format!("{{{}}}", s.join(","))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SVT[{self}]")
    }
}

/// Enumerates `svssyt^n(λ)`, optionally capping the excess.
///
/// The output order is deterministic: lexicographic on the row-major sequence
/// of cells, each cell compared as its sorted entry list.
pub fn enumerate_svt(shape: &Partition, n: u8, max_excess: Option<usize>) -> Vec<SetValuedTableau> {
    if shape.rows() > n as usize {
        return Vec::new();
    }
    let positions: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut cells: Vec<Vec<Vec<u8>>> = shape.parts().iter().map(|&len| vec![Vec::new(); len]).collect();
    fill(shape, n, max_excess, &positions, 0, 0, &mut cells, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    shape: &Partition,
    n: u8,
    max_excess: Option<usize>,
    positions: &[(usize, usize)],
    pos: usize,
    excess: usize,
    cells: &mut Vec<Vec<Vec<u8>>>,
    out: &mut Vec<SetValuedTableau>,
) {
    if pos == positions.len() {
        out.push(SetValuedTableau {
            shape: shape.clone(),
            n,
            cells: cells.clone(),
        });
        return;
    }
    let (r, c) = positions[pos];
    let mut lb = 1u8;
    if c > 0 {
        lb = lb.max(*cells[r][c - 1].last().unwrap());
    }
    if r > 0 {
        lb = lb.max(cells[r - 1][c].last().unwrap() + 1);
    }
    let budget = max_excess.map(|m| m - excess);
    // Emit subsets of [lb..=n] in lexicographic order on their sorted lists.
    let mut stack: Vec<u8> = Vec::new();
    gen_sets(lb, n, budget, &mut stack, &mut |set: &Vec<u8>| {
        cells[r][c] = set.clone();
        let add = set.len() - 1;
        fill(shape, n, max_excess, positions, pos + 1, excess + add, cells, out);
    });
    cells[r][c].clear();
}

/// Visits all nonempty subsets of `lo..=n` as sorted lists, in lexicographic
/// order, with at most `budget + 1` elements when a budget is given.
///
/// Visiting each prefix before its extensions yields exactly lexicographic
/// order on the sorted lists: `[1]`, `[1,2]`, `[1,2,3]`, `[1,3]`, `[2]`, ...
fn gen_sets(lo: u8, n: u8, budget: Option<usize>, stack: &mut Vec<u8>, visit: &mut impl FnMut(&Vec<u8>)) {
    fn rec(next: u8, n: u8, budget: Option<usize>, stack: &mut Vec<u8>, visit: &mut impl FnMut(&Vec<u8>)) {
        visit(stack);
        if budget.is_some_and(|b| stack.len() > b) {
            return;
        }
        for v in next..=n {
            stack.push(v);
            rec(v + 1, n, budget, stack, visit);
            stack.pop();
        }
    }
    for m in lo..=n {
        stack.push(m);
        rec(m + 1, n, budget, stack, visit);
        stack.pop();
    }
}

/// An increasing tableau: single entries, strictly increasing along rows and
/// down columns. Used as the insertion tableau of Hecke insertion.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct IncreasingTableau {
    pub shape: Partition,
    pub cells: Vec<Vec<u8>>,
}

impl IncreasingTableau {
    pub fn new(cells: Vec<Vec<u8>>) -> Result<Self> {
        let shape = Partition::new(cells.iter().map(|r| r.len()).collect::<Vec<_>>())?;
        let t = IncreasingTableau { shape, cells };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        IncreasingTableau { shape: Partition::empty(), cells: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!("row not strictly increasing at ({r},{c})")));
                }
                if r > 0 && c < self.cells[r - 1].len() && self.cells[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!("column not strictly increasing at ({r},{c})")));
                }
            }
        }
        Ok(())
    }

    /// Column reading word: columns right to left, each read top to bottom.
    /// For Hecke column insertion this word stays 0-Hecke equivalent to the
    /// inserted word.
    pub fn column_word(&self) -> Vec<u8> {
        let mut word = Vec::new();
        let cols = self.shape.part(0);
        for c in (0..cols).rev() {
            for row in &self.cells {
                if c < row.len() {
                    word.push(row[c]);
                }
            }
        }
        word
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// A flagged increasing tableau of skew shape `outer/inner`: strictly
/// increasing along rows and columns, and every entry in row `r` (1-based)
/// is at most `r - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FlaggedIncreasingTableau {
    pub shape: SkewShape,
    /// Entries of row `r`, one per skew cell, left to right.
    pub rows: Vec<Vec<u8>>,
}

impl FlaggedIncreasingTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = FlaggedIncreasingTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(shape: SkewShape) -> Result<Self> {
        if shape.size() != 0 {
            return Err(Error::InvalidTableau("nonempty shape for empty filling".into()));
        }
        let rows = vec![Vec::new(); shape.outer.rows()];
        Ok(FlaggedIncreasingTableau { shape, rows })
    }

    pub fn validate(&self) -> Result<()> {
        let outer = &self.shape.outer;
        let inner = &self.shape.inner;
        if self.rows.len() != outer.rows() {
            return Err(Error::InvalidTableau("row count mismatch".into()));
        }
        // Reconstruct a sparse grid indexed by absolute column.
        let mut grid: Vec<Vec<Option<u8>>> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != outer.part(r) - inner.part(r) {
                return Err(Error::InvalidTableau(format!("row {r} width mismatch")));
            }
            let mut line = vec![None; outer.part(r)];
            for (k, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > r {
                    return Err(Error::InvalidTableau(format!(
                        "flag violated in row {r}: entry {v} > {r}"
                    )));
                }
                line[inner.part(r) + k] = Some(v);
            }
            grid.push(line);
        }
        for r in 0..grid.len() {
            for c in 0..grid[r].len() {
                if let Some(v) = grid[r][c] {
                    if c > 0 {
                        if let Some(left) = grid[r][c - 1] {
                            if left >= v {
                                return Err(Error::InvalidTableau(format!("row not increasing at ({r},{c})")));
                            }
                        }
                    }
                    if r > 0 && c < grid[r - 1].len() {
                        if let Some(up) = grid[r - 1][c] {
                            if up >= v {
                                return Err(Error::InvalidTableau(format!("column not increasing at ({r},{c})")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FlaggedIncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let dots = vec!["·"; self.shape.inner.part(r)];
                let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let mut all = dots.iter().map(|s| s.to_string()).collect::<Vec<_>>();
                all.extend(vals);
                all.join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Enumerates all flagged increasing tableaux of shape `outer/inner`.
///
/// Any skew cell in row 1 makes the set empty (the flag there is "at most 0").
pub fn enumerate_flagged_increasing(shape: &SkewShape) -> Vec<FlaggedIncreasingTableau> {
    let outer = &shape.outer;
    let cells: Vec<(usize, usize)> = shape.cells();
    if cells.iter().any(|&(r, _)| r == 0) {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u8>> = (0..outer.rows()).map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        pos: usize,
        rows: &mut Vec<Vec<u8>>,
        grid: &mut Vec<Vec<Option<u8>>>,
        out: &mut Vec<FlaggedIncreasingTableau>,
    ) {
        if pos == cells.len() {
            out.push(FlaggedIncreasingTableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (r, c) = cells[pos];
        let mut lo = 1u8;
        if c > 0 {
            if let Some(Some(left)) = grid.get(r).and_then(|row| row.get(c - 1)) {
                lo = lo.max(left + 1);
            }
        }
        if r > 0 {
            if let Some(Some(up)) = grid.get(r - 1).and_then(|row| row.get(c)) {
                lo = lo.max(up + 1);
            }
        }
        for v in lo..=(r as u8) {
            rows[r].push(v);
            grid[r][c] = Some(v);
            rec(shape, cells, pos + 1, rows, grid, out);
            grid[r][c] = None;
            rows[r].pop();
        }
    }
    let mut grid: Vec<Vec<Option<u8>>> = outer.parts().iter().map(|&len| vec![None; len]).collect();
    rec(shape, &cells, 0, &mut rows, &mut grid, &mut out);
    out
}
