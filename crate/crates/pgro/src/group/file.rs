//! The plain-text group file format.
//!
//! Lines whose first non-blank character is `#` are comments. The first
//! payload line declares the format:
//!
//! ```text
//! perm <degree> <num_generators>
//! ```
//! followed by one generator per line as `<degree>` space-separated 1-based
//! images, or
//!
//! ```text
//! table <order> <num_generators>
//! ```
//! followed by `<order>` lines of `<order>` 1-based entries (row x lists
//! x*y for every y), then one line of `<num_generators>` 1-based generator
//! indices.

use crate::error::{Error, Result};
use crate::group::perm::Permutation;

/// An abstract multiplication table over element indices 0..order.
#[derive(Clone, Debug)]
pub struct MulTable {
    rows: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

impl MulTable {
    /// Builds a table from 0-based rows and generator indices, checking
    /// ranges only; the group axioms are checked by [`regular_action`].
    pub fn new(rows: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for row in &rows {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row of length {} in a table of order {}",
                    row.len(),
                    order
                )));
            }
            if row.iter().any(|&e| e >= order) {
                return Err(Error::MalformedTable("entry out of range".into()));
            }
        }
        if generators.is_empty() || generators.iter().any(|&g| g >= order) {
            return Err(Error::MalformedTable("bad generator indices".into()));
        }
        Ok(MulTable { rows, generators })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// The product `x * y` as a table index.
    pub fn product(&self, x: usize, y: usize) -> usize {
        self.rows[x][y]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// Converts a multiplication table into permutations via the regular action.
///
/// Returns, for each declared generator g, the permutation `x -> x * g` of
/// element indices (degree = table order). Checks that the rows and columns
/// are bijections and that a two-sided identity exists.
pub fn regular_action(table: &MulTable) -> Result<Vec<Permutation>> {
    let order = table.order();
    for (x, row) in table.rows.iter().enumerate() {
        let mut seen = vec![false; order];
        for &e in row {
            if seen[e] {
                return Err(Error::MalformedTable(format!(
                    "row {} is not a bijection",
                    x + 1
                )));
            }
            seen[e] = true;
        }
    }
    for y in 0..order {
        let mut seen = vec![false; order];
        for x in 0..order {
            let e = table.product(x, y);
            if seen[e] {
                return Err(Error::MalformedTable(format!(
                    "column {} is not a bijection",
                    y + 1
                )));
            }
            seen[e] = true;
        }
    }
    let identity = (0..order).find(|&e| {
        (0..order).all(|y| table.product(e, y) == y) && (0..order).all(|x| table.product(x, e) == x)
    });
    if identity.is_none() {
        return Err(Error::MalformedTable("no two-sided identity".into()));
    }

    table
        .generators
        .iter()
        .map(|&g| {
            let images: Vec<usize> = (0..order).map(|x| table.product(x, g)).collect();
            Permutation::from_images(images)
                .map_err(|e| Error::MalformedTable(format!("generator column: {e}")))
        })
        .collect()
}

/// A parsed group file.
#[derive(Clone, Debug)]
pub enum GroupFile {
    Perms(Vec<Permutation>),
    Table(MulTable),
}

impl GroupFile {
    /// The generator permutations this file defines. Tables go through the
    /// regular action.
    pub fn generator_permutations(&self) -> Result<Vec<Permutation>> {
        match self {
            GroupFile::Perms(perms) => Ok(perms.clone()),
            GroupFile::Table(table) => regular_action(table),
        }
    }
}

fn parse_fields(line: &str, what: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad {what} entry '{tok}'")))
        })
        .collect()
}

/// Parses the text of a group file.
pub fn parse_group_file(text: &str) -> Result<GroupFile> {
    let mut lines = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap_or("");
    let sizes: Vec<usize> = toks
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header field '{t}'")))
        })
        .collect::<Result<_>>()?;
    let [size, num_gens] = sizes[..] else {
        return Err(Error::Parse(format!(
            "header must be '{kind} <size> <num_generators>'"
        )));
    };
    if num_gens == 0 {
        return Err(Error::Parse(
            "a group file needs at least one generator".into(),
        ));
    }

    let parsed = match kind {
        "perm" => {
            let mut perms = Vec::with_capacity(num_gens);
            for k in 0..num_gens {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing generator line {}", k + 1)))?;
                let images = parse_fields(line, "image")?;
                if images.len() != size {
                    return Err(Error::Parse(format!(
                        "generator {} has {} images, expected {}",
                        k + 1,
                        images.len(),
                        size
                    )));
                }
                perms.push(
                    Permutation::from_one_based(images)
                        .map_err(|e| Error::Parse(format!("generator {}: {e}", k + 1)))?,
                );
            }
            GroupFile::Perms(perms)
        }
        "table" => {
            let mut rows = Vec::with_capacity(size);
            for x in 0..size {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing table row {}", x + 1)))?;
                let entries = parse_fields(line, "table")?;
                if entries.len() != size {
                    return Err(Error::Parse(format!(
                        "table row {} has {} entries, expected {}",
                        x + 1,
                        entries.len(),
                        size
                    )));
                }
                let row: Vec<usize> = entries
                    .into_iter()
                    .map(|e| {
                        if e == 0 || e > size {
                            Err(Error::Parse(format!("table entry {e} out of range")))
                        } else {
                            Ok(e - 1)
                        }
                    })
                    .collect::<Result<_>>()?;
                rows.push(row);
            }
            let gen_line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing generator index line".into()))?;
            let gens = parse_fields(gen_line, "generator index")?;
            if gens.len() != num_gens {
                return Err(Error::Parse(format!(
                    "expected {} generator indices, got {}",
                    num_gens,
                    gens.len()
                )));
            }
            let gens: Vec<usize> = gens
                .into_iter()
                .map(|g| {
                    if g == 0 || g > size {
                        Err(Error::Parse(format!("generator index {g} out of range")))
                    } else {
                        Ok(g - 1)
                    }
                })
                .collect::<Result<_>>()?;
            GroupFile::Table(MulTable::new(rows, gens)?)
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown format '{other}', expected 'perm' or 'table'"
            )))
        }
    };

    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!(
            "unexpected trailing content: '{}'",
            extra.trim()
        )));
    }
    Ok(parsed)
}

/// Renders generator permutations in the `perm` file format.
pub fn render_perm_file(comment: &str, perms: &[Permutation]) -> String {
    let degree = perms[0].degree();
    let mut out = format!("# {comment}\nperm {degree} {}\n", perms.len());
    for p in perms {
        let images: Vec<String> = p.to_one_based().iter().map(|i| i.to_string()).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a multiplication table in the `table` file format.
pub fn render_table_file(comment: &str, table: &MulTable) -> String {
    let order = table.order();
    let mut out = format!("# {comment}\ntable {order} {}\n", table.generators().len());
    for x in 0..order {
        let row: Vec<String> = (0..order)
            .map(|y| (table.product(x, y) + 1).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    let gens: Vec<String> = table
        .generators()
        .iter()
        .map(|g| (g + 1).to_string())
        .collect();
    out.push_str(&gens.join(" "));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_table() -> MulTable {
        // Cyclic group of order 4 as indices 0..4 with x*y = x+y mod 4.
        let rows = (0..4)
            .map(|x| (0..4).map(|y| (x + y) % 4).collect())
            .collect();
        MulTable::new(rows, vec![1]).unwrap()
    }

    #[test]
    fn regular_action_of_c2_and_c4() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let t = MulTable::new(rows, vec![1]).unwrap();
        let perms = regular_action(&t).unwrap();
        assert_eq!(perms[0].to_one_based(), vec![2, 1]);

        let perms = regular_action(&c4_table()).unwrap();
        assert_eq!(perms[0].to_one_based(), vec![2, 3, 4, 1]);
    }

    #[test]
    fn regular_action_rejects_broken_tables() {
        let rows = vec![vec![0, 0], vec![1, 0]];
        let t = MulTable::new(rows, vec![1]).unwrap();
        assert!(matches!(regular_action(&t), Err(Error::MalformedTable(_))));
        // A Latin square with no identity row at all.
        let rows = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        let t = MulTable::new(rows, vec![1]).unwrap();
        assert!(matches!(regular_action(&t), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn parse_perm_file() {
        let text = "# Klein four\nperm 4 2\n2 1 4 3\n3 4 1 2\n";
        let GroupFile::Perms(perms) = parse_group_file(text).unwrap() else {
            panic!("expected perm format");
        };
        assert_eq!(perms.len(), 2);
        assert_eq!(perms[0].to_one_based(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn parse_table_file_round_trip() {
        let text = render_table_file("c4", &c4_table());
        let GroupFile::Table(t) = parse_group_file(&text).unwrap() else {
            panic!("expected table format");
        };
        assert_eq!(t.order(), 4);
        assert_eq!(t.generators(), &[1]);
        assert_eq!(t.product(3, 1), 0);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_group_file("").is_err());
        assert!(parse_group_file("perm 4\n").is_err());
        assert!(parse_group_file("perm 4 1\n2 1 4\n").is_err());
        assert!(parse_group_file("perm 4 1\n2 1 4 3\nextra\n").is_err());
        assert!(parse_group_file("ring 4 1\n").is_err());
        assert!(parse_group_file("table 2 1\n1 2\n2 1\n5\n").is_err());
    }
}
