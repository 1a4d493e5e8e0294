//! Finite groups given by validated Cayley tables.

use std::collections::HashSet;

use thiserror::Error;

use crate::budget::{power, Budget, BudgetExceeded};
use crate::search::TableSearch;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("table must be {order}x{order}, row {row} has {len} entries")]
    BadShape {
        order: usize,
        row: usize,
        len: usize,
    },
    #[error("table entry {value} at ({row}, {col}) is not an element")]
    NotClosed {
        row: String,
        col: String,
        value: usize,
    },
    #[error("associativity fails: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(String, String, String),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    MissingInverse(String),
}

/// A finite group on dense indices `0..n` with human-readable labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

pub(crate) fn check_names(names: &[String]) -> Result<(), String> {
    let mut seen = HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(name.clone());
        }
    }
    Ok(())
}

/// Flattens a square table, checking shape and closure.
pub(crate) fn flatten_table(
    names: &[String],
    rows: &[Vec<usize>],
) -> Result<Vec<usize>, GroupError> {
    let n = names.len();
    if rows.len() != n {
        return Err(GroupError::BadShape {
            order: n,
            row: rows.len(),
            len: 0,
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::BadShape {
                order: n,
                row: r,
                len: row.len(),
            });
        }
        for (c, &value) in row.iter().enumerate() {
            if value >= n {
                return Err(GroupError::NotClosed {
                    row: names[r].clone(),
                    col: names[c].clone(),
                    value,
                });
            }
            table.push(value);
        }
    }
    Ok(table)
}

/// First triple `(x, y, z)` with `(xy)z != x(yz)`.
pub(crate) fn associativity_witness(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            let xy = table[x * n + y];
            for z in 0..n {
                if table[xy * n + z] != table[x * n + table[y * n + z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Checks closure, associativity, identity and inverses; identity and
/// inverses are computed from the table.
pub fn validate_group(names: Vec<String>, rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = names.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    check_names(&names).map_err(GroupError::DuplicateName)?;
    let table = flatten_table(&names, rows)?;
    if let Some((x, y, z)) = associativity_witness(n, &table) {
        return Err(GroupError::NotAssociative(
            names[x].clone(),
            names[y].clone(),
            names[z].clone(),
        ));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
        .ok_or(GroupError::NoIdentity)?;
    let mut inverses = Vec::with_capacity(n);
    for x in 0..n {
        let inv = (0..n)
            .find(|&y| table[x * n + y] == identity && table[y * n + x] == identity)
            .ok_or_else(|| GroupError::MissingInverse(names[x].clone()))?;
        inverses.push(inv);
    }
    Ok(FiniteGroup {
        names,
        table,
        identity,
        inverses,
    })
}

fn from_mul(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let n = names.len();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| mul(x, y)).collect())
        .collect();
    validate_group(names, &rows).expect("built-in group tables are valid")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

impl FiniteGroup {
    /// The group with a single element `e`.
    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    /// Z_n with elements `e, a, a^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group needs a positive order");
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        from_mul(names, |x, y| (x + y) % n)
    }

    /// The Klein four-group `{e, a, b, c}`, every element self-inverse.
    pub fn klein_four() -> Self {
        from_mul(labels(&["e", "a", "b", "c"]), |x, y| x ^ y)
    }

    /// S_3 as permutations of `{1, 2, 3}` in cycle notation.
    pub fn symmetric3() -> Self {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let names = labels(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        // (pq)(i) = p(q(i)): apply q first.
        from_mul(names, |p, q| {
            let composed = [0, 1, 2].map(|i| PERMS[p][PERMS[q][i]]);
            PERMS.iter().position(|&r| r == composed).unwrap()
        })
    }

    /// The dihedral group of order 8, `r^i s^j` with `srs = r^-1`.
    pub fn dihedral4() -> Self {
        let names = labels(&["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]);
        from_mul(names, |x, y| {
            let (i, j) = (x % 4, x / 4);
            let (k, l) = (y % 4, y / 4);
            let rot = if j == 0 { i + k } else { i + 4 - k };
            (rot % 4) + 4 * ((j + l) % 2)
        })
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        let names = labels(&["1", "-1", "i", "-i", "j", "-j", "k", "-k"]);
        // units 0..4 = 1, i, j, k; entry = (sign flip, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        from_mul(names, |x, y| {
            let (flip, unit) = UNIT[x / 2][y / 2];
            2 * unit + ((x % 2) ^ (y % 2) ^ flip)
        })
    }

    /// Direct product with elements named `(g,h)`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.order();
        let names = self
            .names
            .iter()
            .flat_map(|g| other.names.iter().map(move |h| format!("({g},{h})")))
            .collect();
        from_mul(names, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    /// Every isomorphism type of group of order at most 8, one representative each.
    pub fn all_of_order_at_most_8() -> Vec<FiniteGroup> {
        let z2 = FiniteGroup::cyclic(2);
        vec![
            FiniteGroup::cyclic(1),
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::klein_four(),
            FiniteGroup::cyclic(5),
            FiniteGroup::cyclic(6),
            FiniteGroup::symmetric3(),
            FiniteGroup::cyclic(7),
            FiniteGroup::cyclic(8),
            FiniteGroup::cyclic(4).direct_product(&z2),
            z2.direct_product(&z2).direct_product(&z2),
            FiniteGroup::dihedral4(),
            FiniteGroup::quaternion(),
        ]
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row-major flat Cayley table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// True iff `subset` contains the identity and is closed under products
    /// and inverses. Duplicates in `subset` are ignored.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in subset {
            if x >= self.order() {
                return false;
            }
            member[x] = true;
        }
        member[self.identity]
            && subset.iter().all(|&x| member[self.inverse(x)])
            && subset
                .iter()
                .all(|&x| subset.iter().all(|&y| member[self.mul(x, y)]))
    }

    pub fn format_subset(&self, subset: &[usize]) -> String {
        let parts: Vec<&str> = subset.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// True iff `f` is total on `source` and `f(xy) = f(x)f(y)` for all `x, y`.
pub fn is_group_homomorphism(f: &[usize], source: &FiniteGroup, target: &FiniteGroup) -> bool {
    f.len() == source.order()
        && f.iter().all(|&y| y < target.order())
        && source.elements().all(|x| {
            source
                .elements()
                .all(|y| f[source.mul(x, y)] == target.mul(f[x], f[y]))
        })
}

/// All homomorphisms `source -> target` in lexicographic order of their
/// image tables. The budget bounds `|target|^|source|`.
pub fn enumerate_group_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    budget: Budget,
) -> Result<Vec<Vec<usize>>, BudgetExceeded> {
    budget.admit(power(target.order(), source.order()))?;
    TableSearch {
        source: source.table(),
        source_order: source.order(),
        target: target.table(),
        target_order: target.order(),
        candidates: vec![target.elements().collect(); source.order()],
        injective: false,
        first_only: false,
    }
    .run(None)
}

/// Composite `g ∘ f` of two element maps.
pub fn compose_maps(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&y| g[y]).collect()
}
