//! Exact cover by Knuth's dancing links.
//!
//! Columns are the universe elements `0..columns`; each row is a candidate
//! subset. The search always branches on the column with the fewest live
//! rows (lowest index on ties) and tries rows in insertion order, so results
//! are reproducible.

use crate::{Error, Result};

const ROOT: usize = 0;

#[derive(Clone, Debug, Default)]
pub struct ExactCover {
    columns: usize,
    rows: Vec<Vec<usize>>,
}

impl ExactCover {
    pub fn new(columns: usize) -> Self {
        ExactCover {
            columns,
            rows: Vec::new(),
        }
    }

    /// Adds a candidate and returns its row id. Column ids are deduplicated;
    /// an out-of-range column panics.
    pub fn add_row(&mut self, cols: impl IntoIterator<Item = usize>) -> usize {
        let mut cols: Vec<usize> = cols.into_iter().collect();
        cols.sort_unstable();
        cols.dedup();
        assert!(
            cols.last().is_none_or(|&c| c < self.columns),
            "column out of range (universe has {} columns)",
            self.columns
        );
        self.rows.push(cols);
        self.rows.len() - 1
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// First cover found, as sorted row ids. `max_nodes` bounds the number of
    /// search nodes; running out is a guard error, not "no solution".
    pub fn first_solution(&self, max_nodes: u64) -> Result<Option<Vec<usize>>> {
        let mut dl = Links::build(self);
        let mut search = Search::new(max_nodes, false);
        dl.search(&mut search)?;
        Ok(search.first.map(|mut rows| {
            rows.sort_unstable();
            rows
        }))
    }

    /// Number of distinct covers.
    pub fn count_solutions(&self, max_nodes: u64) -> Result<u64> {
        let mut dl = Links::build(self);
        let mut search = Search::new(max_nodes, true);
        dl.search(&mut search)?;
        Ok(search.count)
    }
}

struct Search {
    budget: u64,
    nodes: u64,
    count_all: bool,
    count: u64,
    partial: Vec<usize>,
    first: Option<Vec<usize>>,
}

impl Search {
    fn new(budget: u64, count_all: bool) -> Self {
        Search {
            budget,
            nodes: 0,
            count_all,
            count: 0,
            partial: Vec::new(),
            first: None,
        }
    }

    fn done(&self) -> bool {
        !self.count_all && self.first.is_some()
    }
}

// Node 0 is the root, nodes 1..=columns are column headers, the rest are
// row cells.
struct Links {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
}

impl Links {
    fn build(ec: &ExactCover) -> Self {
        let headers = ec.columns + 1;
        let cells: usize = ec.rows.iter().map(Vec::len).sum();
        let total = headers + cells;
        let mut l = Links {
            left: Vec::with_capacity(total),
            right: Vec::with_capacity(total),
            up: Vec::with_capacity(total),
            down: Vec::with_capacity(total),
            col: Vec::with_capacity(total),
            row: Vec::with_capacity(total),
            size: vec![0; headers],
        };
        for h in 0..headers {
            l.left.push(if h == 0 { ec.columns } else { h - 1 });
            l.right.push(if h == ec.columns { 0 } else { h + 1 });
            l.up.push(h);
            l.down.push(h);
            l.col.push(h);
            l.row.push(usize::MAX);
        }
        for (r, cols) in ec.rows.iter().enumerate() {
            let first = l.left.len();
            for (i, &c) in cols.iter().enumerate() {
                let node = l.left.len();
                let h = c + 1;
                let last = if i + 1 == cols.len() { first } else { node + 1 };
                l.left.push(if i == 0 { first + cols.len() - 1 } else { node - 1 });
                l.right.push(last);
                l.up.push(l.up[h]);
                l.down.push(h);
                let above = l.up[h];
                l.down[above] = node;
                l.up[h] = node;
                l.col.push(h);
                l.row.push(r);
                l.size[h] += 1;
            }
        }
        l
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    fn choose_column(&self) -> usize {
        let mut best = self.right[ROOT];
        let mut c = best;
        while c != ROOT {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        best
    }

    fn search(&mut self, st: &mut Search) -> Result<()> {
        st.nodes += 1;
        if st.nodes > st.budget {
            return Err(Error::guard("exact-cover search nodes", st.nodes, st.budget));
        }
        if self.right[ROOT] == ROOT {
            st.count += 1;
            if st.first.is_none() {
                st.first = Some(st.partial.clone());
            }
            return Ok(());
        }
        let c = self.choose_column();
        if self.size[c] == 0 {
            return Ok(());
        }
        self.cover(c);
        let mut r = self.down[c];
        while r != c {
            st.partial.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.col[j]);
                j = self.right[j];
            }
            let res = self.search(st);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.col[j]);
                j = self.left[j];
            }
            st.partial.pop();
            res?;
            if st.done() {
                break;
            }
            r = self.down[r];
        }
        self.uncover(c);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Knuth's example: rows C, E, F cover columns 0..7 exactly.
    fn knuth() -> ExactCover {
        let mut ec = ExactCover::new(7);
        ec.add_row([2, 4, 5]);
        ec.add_row([0, 3, 6]);
        ec.add_row([1, 2, 5]);
        ec.add_row([0, 3]);
        ec.add_row([1, 6]);
        ec.add_row([3, 4, 6]);
        ec
    }

    #[test]
    fn knuth_example() {
        let ec = knuth();
        assert_eq!(ec.first_solution(1_000).unwrap(), Some(vec![0, 3, 4]));
        assert_eq!(ec.count_solutions(1_000).unwrap(), 1);
    }

    #[test]
    fn no_cover() {
        let mut ec = ExactCover::new(3);
        ec.add_row([0, 1]);
        ec.add_row([1, 2]);
        assert_eq!(ec.first_solution(1_000).unwrap(), None);
        assert_eq!(ec.count_solutions(1_000).unwrap(), 0);
    }

    #[test]
    fn empty_universe_has_one_cover() {
        let ec = ExactCover::new(0);
        assert_eq!(ec.first_solution(10).unwrap(), Some(vec![]));
        assert_eq!(ec.count_solutions(10).unwrap(), 1);
    }

    #[test]
    fn perfect_matchings_of_k4() {
        let mut ec = ExactCover::new(4);
        for a in 0..4 {
            for b in a + 1..4 {
                ec.add_row([a, b]);
            }
        }
        assert_eq!(ec.count_solutions(1_000).unwrap(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let mut ec = ExactCover::new(8);
        for a in 0..8 {
            for b in a + 1..8 {
                ec.add_row([a, b]);
            }
        }
        assert!(matches!(ec.count_solutions(5), Err(Error::GuardExceeded { .. })));
        assert_eq!(ec.count_solutions(100_000).unwrap(), 105);
    }
}
