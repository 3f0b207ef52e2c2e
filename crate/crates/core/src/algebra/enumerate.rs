//! Exhaustive enumeration of labeled biquandles of small order.
//!
//! The up table is filled first, column permutation by column permutation in
//! row-major order. For each complete up table the interchange law
//! `f_c ∘ f_b = f_{b↑c} ∘ f_{c↓b}` restricts every down cell `c ↓ b` to a
//! small candidate set, and axiom 2 pins one cell per row outright. The down
//! table is then filled in row-major order, checking every axiom instance
//! whose operands are already known. Depth-first order with ascending values
//! yields the results sorted by their row-major `(up, down)` encoding.

use alloc::vec;
use alloc::vec::Vec;

use super::{check_flat, FiniteBiquandle};

/// Largest order [`enumerate_biquandles`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 4;

const UNSET: usize = usize::MAX;

/// Every labeled biquandle of order `n`, sorted by row-major `(up, down)`.
///
/// Returns `None` when `n` is zero or exceeds [`MAX_ENUMERATION_ORDER`].
pub fn enumerate_biquandles(n: usize) -> Option<Vec<FiniteBiquandle>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return None;
    }
    let mut search = Search { n, up: vec![UNSET; n * n], down: vec![UNSET; n * n], out: Vec::new() };
    search.fill_up(0);
    Some(search.out)
}

struct Search {
    n: usize,
    up: Vec<usize>,
    down: Vec<usize>,
    out: Vec<FiniteBiquandle>,
}

impl Search {
    fn fill_up(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            self.start_down();
            return;
        }
        let (row, col) = (cell / n, cell % n);
        for v in 0..n {
            if (0..row).any(|r| self.up[r * n + col] == v) {
                continue;
            }
            self.up[cell] = v;
            self.fill_up(cell + 1);
        }
        self.up[cell] = UNSET;
    }

    fn start_down(&mut self) {
        let n = self.n;
        let up = &self.up;
        // candidates[c * n + b]: values d for which f_c ∘ f_b = f_{b↑c} ∘ f_d.
        let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for b in 0..n {
            for c in 0..n {
                let bc = up[b * n + c];
                candidates[c * n + b] = (0..n)
                    .filter(|&d| (0..n).all(|a| up[up[a * n + b] * n + c] == up[up[a * n + d] * n + bc]))
                    .collect();
            }
        }
        // Axiom 2: with x = f_a⁻¹(a) the cell a ↓ x must equal x.
        for a in 0..n {
            let x = (0..n).find(|&x| up[x * n + a] == a).expect("up columns are permutations");
            let cell = &mut candidates[a * n + x];
            if !cell.contains(&x) {
                return;
            }
            *cell = vec![x];
        }
        if candidates.iter().any(Vec::is_empty) {
            return;
        }
        self.fill_down(0, &candidates);
    }

    fn fill_down(&mut self, cell: usize, candidates: &[Vec<usize>]) {
        let n = self.n;
        if cell == n * n {
            let report = check_flat(n, &self.up, &self.down);
            if report.passed {
                self.out.push(FiniteBiquandle::from_valid_flat(n, self.up.clone(), self.down.clone()));
            }
            return;
        }
        let (row, col) = (cell / n, cell % n);
        for &v in &candidates[cell] {
            if (0..row).any(|r| self.down[r * n + col] == v) {
                continue;
            }
            self.down[cell] = v;
            if self.partial_ok(row, col) {
                self.fill_down(cell + 1, candidates);
            }
        }
        self.down[cell] = UNSET;
    }

    /// Check the switch map and every third-axiom instance that can be
    /// evaluated with the cells filled so far.
    fn partial_ok(&self, row: usize, col: usize) -> bool {
        let n = self.n;
        let up = |a: usize, b: usize| self.up[a * n + b];
        let down = |a: usize, b: usize| {
            if a == UNSET || b == UNSET {
                UNSET
            } else {
                self.down[a * n + b]
            }
        };
        let upu = |a: usize, b: usize| if a == UNSET || b == UNSET { UNSET } else { up(a, b) };

        // S(x, y) = (y↓x, x↑y) must stay injective: the new cell is y = row, x = col.
        let image = (down(row, col), up(col, row));
        for y in 0..n {
            for x in 0..n {
                if (y, x) != (row, col) && down(y, x) == image.0 && up(x, y) == image.1 {
                    return false;
                }
            }
        }

        let differ = |l: usize, r: usize| l != UNSET && r != UNSET && l != r;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if differ(up(up(a, b), c), upu(upu(a, down(c, b)), up(b, c))) {
                        return false;
                    }
                    let l = upu(down(a, b), down(c, up(b, a)));
                    let r = down(up(a, c), upu(b, down(c, a)));
                    if differ(l, r) {
                        return false;
                    }
                    if differ(down(down(a, b), c), down(down(a, up(c, b)), down(b, c))) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
