//! Backtracking enumeration of Latin squares, i.e. of all quasigroups on
//! `{0, …, n-1}`.
//!
//! Cells are filled row-major, trying values in ascending order, so squares come
//! out in strictly increasing lexicographic order of their flattened tables.

use crate::error::{Error, Result};
use crate::qcore::{OpTable, Quasigroup};

/// Largest order enumerated unless the caller raises the cap.
pub const DEFAULT_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub order: usize,
    /// Only squares whose first row and first column are `0, 1, …, n-1`.
    pub reduced: bool,
    /// Stop after this many squares.
    pub limit: Option<usize>,
    pub max_order: usize,
}

impl EnumerationConfig {
    pub fn new(order: usize) -> Self {
        EnumerationConfig {
            order,
            reduced: false,
            limit: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    pub fn reduced(mut self, reduced: bool) -> Self {
        self.reduced = reduced;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Precondition("order must be at least 1".into()));
        }
        if self.limit == Some(0) {
            return Err(Error::Precondition("limit must be at least 1".into()));
        }
        if self.order > self.max_order.min(64) {
            return Err(Error::OrderTooLarge {
                order: self.order,
                max: self.max_order.min(64),
            });
        }
        Ok(())
    }
}

const UNSET: usize = usize::MAX;

/// Partial square plus row/column occupancy bitmasks.
#[derive(Debug, Clone)]
struct Grid {
    n: usize,
    cells: Vec<usize>,
    fixed: Vec<bool>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
}

impl Grid {
    fn new(n: usize, reduced: bool) -> Self {
        let mut grid = Grid {
            n,
            cells: vec![UNSET; n * n],
            fixed: vec![false; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
        };
        if reduced {
            for i in 0..n {
                grid.fix(0, i, i);
                if i > 0 {
                    grid.fix(i, 0, i);
                }
            }
        }
        grid
    }

    fn fix(&mut self, r: usize, c: usize, v: usize) {
        self.place(r * self.n + c, v);
        self.fixed[r * self.n + c] = true;
    }

    #[inline]
    fn place(&mut self, pos: usize, v: usize) {
        let (r, c) = (pos / self.n, pos % self.n);
        self.cells[pos] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
    }

    /// Clears the masks for the value at `pos` but leaves it in `cells` so the
    /// search can resume from the next value.
    #[inline]
    fn lift(&mut self, pos: usize) {
        let (r, c) = (pos / self.n, pos % self.n);
        let v = self.cells[pos];
        self.row_used[r] &= !(1 << v);
        self.col_used[c] &= !(1 << v);
    }

    /// Smallest value `>= from` free in both the row and column of `pos`.
    #[inline]
    fn next_free(&self, pos: usize, from: usize) -> Option<usize> {
        let (r, c) = (pos / self.n, pos % self.n);
        let used = self.row_used[r] | self.col_used[c];
        (from..self.n).find(|&v| used & (1 << v) == 0)
    }
}

/// A lazy, deterministic stream of Latin squares.
#[derive(Debug, Clone)]
pub struct LatinSquares {
    grid: Grid,
    pos: usize,
    started: bool,
    done: bool,
    emitted: usize,
    limit: Option<usize>,
}

impl LatinSquares {
    /// Steps back to the previous free cell and lifts its value.
    fn retreat(&mut self) -> bool {
        loop {
            if self.pos == 0 {
                return false;
            }
            self.pos -= 1;
            if !self.grid.fixed[self.pos] {
                self.grid.lift(self.pos);
                return true;
            }
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        let total = self.grid.n * self.grid.n;
        if self.started && !self.retreat() {
            return None;
        }
        self.started = true;
        loop {
            if self.pos == total {
                return Some(&self.grid.cells);
            }
            if self.grid.fixed[self.pos] {
                self.pos += 1;
                continue;
            }
            let from = match self.grid.cells[self.pos] {
                UNSET => 0,
                v => v + 1,
            };
            match self.grid.next_free(self.pos, from) {
                Some(v) => {
                    self.grid.place(self.pos, v);
                    self.pos += 1;
                }
                None => {
                    self.grid.cells[self.pos] = UNSET;
                    if !self.retreat() {
                        return None;
                    }
                }
            }
        }
    }
}

impl Iterator for LatinSquares {
    type Item = Quasigroup;

    fn next(&mut self) -> Option<Quasigroup> {
        if self.done || self.limit.is_some_and(|l| self.emitted >= l) {
            return None;
        }
        let n = self.grid.n;
        match self.advance() {
            Some(cells) => {
                let table = OpTable::from_cells(n, cells.to_vec()).expect("cells in range");
                self.emitted += 1;
                Some(Quasigroup::from_table(table).expect("backtracking emits Latin squares"))
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

pub fn enumerate_latin_squares(cfg: &EnumerationConfig) -> Result<LatinSquares> {
    cfg.validate()?;
    Ok(LatinSquares {
        grid: Grid::new(cfg.order, cfg.reduced),
        pos: 0,
        started: false,
        done: false,
        emitted: 0,
        limit: cfg.limit,
    })
}

/// Number of squares the matching enumeration would yield, without building them.
pub fn count_latin_squares(cfg: &EnumerationConfig) -> Result<u64> {
    cfg.validate()?;
    fn count(grid: &mut Grid, pos: usize, cap: u64) -> u64 {
        let total = grid.n * grid.n;
        if pos == total {
            return 1;
        }
        if grid.fixed[pos] {
            return count(grid, pos + 1, cap);
        }
        let mut found = 0;
        let mut from = 0;
        while let Some(v) = grid.next_free(pos, from) {
            grid.place(pos, v);
            found += count(grid, pos + 1, cap - found);
            grid.lift(pos);
            if found >= cap {
                break;
            }
            from = v + 1;
        }
        grid.cells[pos] = UNSET;
        found
    }
    let cap = cfg.limit.map_or(u64::MAX, |l| l as u64);
    let mut grid = Grid::new(cfg.order, cfg.reduced);
    Ok(count(&mut grid, 0, cap))
}

/// Every quasigroup of order `1..=max_order`, in order then lexicographically.
pub fn catalog(max_order: usize) -> Result<Vec<Quasigroup>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_latin_squares(
            &EnumerationConfig::new(n).max_order(max_order.max(DEFAULT_MAX_ORDER)),
        )?);
    }
    Ok(out)
}
