use serde::Deserialize;

use super::HiError;

/// A finite group given by its Cayley table, `cayley[a * order + b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    cayley: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

#[derive(Deserialize)]
struct GroupFile {
    #[serde(default)]
    labels: Option<Vec<String>>,
    cayley: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates the table exhaustively: Latin square, two-sided identity,
    /// inverses and associativity.
    pub fn from_cayley(labels: Option<Vec<String>>, table: Vec<Vec<usize>>) -> Result<Self, HiError> {
        let m = table.len();
        if m == 0 {
            return Err(HiError::Group("empty Cayley table".into()));
        }
        if let Some(row) = table.iter().position(|row| row.len() != m) {
            return Err(HiError::Group(format!("row {row} has the wrong length")));
        }
        if let Some(v) = table.iter().flatten().find(|&&v| v >= m) {
            return Err(HiError::Group(format!("entry {v} out of range")));
        }
        for a in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for b in 0..m {
                row_seen[table[a][b]] = true;
                col_seen[table[b][a]] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return Err(HiError::Group(format!(
                    "not a Latin square at row/column {a}"
                )));
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| HiError::Group("no identity element".into()))?;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HiError::Group(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..m)
            .map(|a| (0..m).find(|&b| table[a][b] == identity).expect("Latin square"))
            .collect();
        let labels = match labels {
            Some(l) if l.len() == m => l,
            Some(l) => {
                return Err(HiError::Group(format!(
                    "{} labels for a group of order {m}",
                    l.len()
                )))
            }
            None => (0..m).map(|a| format!("g{a}")).collect(),
        };
        Ok(FiniteGroup {
            labels,
            cayley: table.into_iter().flatten().collect(),
            inverse,
            identity,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, HiError> {
        let file: GroupFile =
            serde_json::from_str(text).map_err(|e| HiError::Group(format!("bad group file: {e}")))?;
        FiniteGroup::from_cayley(file.labels, file.cayley)
    }

    /// `Z_n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_cayley(Some(labels), table).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (p, q) = (a.order(), b.order());
        let labels = (0..p * q)
            .map(|x| format!("({},{})", a.labels[x / q], b.labels[x % q]))
            .collect();
        let table = (0..p * q)
            .map(|x| {
                (0..p * q)
                    .map(|y| a.mul(x / q, y / q) * q + b.mul(x % q, y % q))
                    .collect()
            })
            .collect();
        FiniteGroup::from_cayley(Some(labels), table).expect("product of groups")
    }

    pub fn klein() -> Self {
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
    }

    /// `S_3` as permutations of `{0,1,2}` in lexicographic order, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("[{}{}{}]", p[0], p[1], p[2]))
            .collect();
        FiniteGroup::from_cayley(Some(labels), table).expect("S_3")
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Largest element order.
    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != self.identity {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            })
            .fold(1, num_integer::lcm)
    }
}
