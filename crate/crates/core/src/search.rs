//! Backtracking search for structure-preserving maps between finite
//! multiplication tables.
//!
//! Elements of the source are assigned in index order and candidates are
//! tried ascending, so solutions come out in lexicographic order. Each
//! product constraint `f(ab) = f(a)f(b)` is checked as soon as the largest
//! of `a`, `b`, `ab` has been assigned.

use crate::budget::{Budget, BudgetExceeded};

pub(crate) struct TableSearch<'a> {
    pub source: &'a [usize],
    pub source_order: usize,
    pub target: &'a [usize],
    pub target_order: usize,
    pub candidates: Vec<Vec<usize>>,
    pub injective: bool,
    pub first_only: bool,
}

impl TableSearch<'_> {
    /// Size of the raw candidate space (product of candidate list lengths).
    pub fn space(&self) -> u128 {
        self.candidates
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// Runs the search after admitting the raw candidate space.
    pub fn run_bounded_space(self, budget: Budget) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
        budget.admit(self.space())?;
        self.run(None)
    }

    /// Runs the search, counting visited nodes against an optional limit.
    pub fn run(self, node_limit: Option<Budget>) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
        let n = self.source_order;
        let mut constraints: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                let c = self.source[a * n + b];
                constraints[a.max(b).max(c)].push((a, b, c));
            }
        }
        let mut state = State {
            search: &self,
            constraints,
            image: vec![usize::MAX; n],
            used: vec![false; self.target_order],
            nodes: 0,
            node_limit,
            found: Vec::new(),
        };
        state.descend(0)?;
        Ok(state.found)
    }
}

struct State<'s, 'a> {
    search: &'s TableSearch<'a>,
    constraints: Vec<Vec<(usize, usize, usize)>>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u128,
    node_limit: Option<Budget>,
    found: Vec<Vec<usize>>,
}

impl State<'_, '_> {
    fn done(&self) -> bool {
        self.search.first_only && !self.found.is_empty()
    }

    fn descend(&mut self, i: usize) -> Result<(), BudgetExceeded> {
        if i == self.search.source_order {
            self.found.push(self.image.clone());
            return Ok(());
        }
        let m = self.search.target_order;
        for k in 0..self.search.candidates[i].len() {
            let y = self.search.candidates[i][k];
            if self.search.injective && self.used[y] {
                continue;
            }
            self.nodes += 1;
            if let Some(limit) = self.node_limit {
                limit.admit(self.nodes)?;
            }
            self.image[i] = y;
            let consistent = self.constraints[i].iter().all(|&(a, b, c)| {
                self.image[c] == self.search.target[self.image[a] * m + self.image[b]]
            });
            if consistent {
                self.used[y] = true;
                self.descend(i + 1)?;
                self.used[y] = false;
                if self.done() {
                    break;
                }
            }
        }
        self.image[i] = usize::MAX;
        Ok(())
    }
}
