//! The bundled corpus of small p-groups.
//!
//! Small abelian and dihedral groups ship in the `perm` format; the rest
//! are built here from explicit element sets and multiplication laws and
//! rendered as `table` files. Every entry is closed and checked against
//! its declared order on load.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::Result;
use crate::group::{close_group, parse_group_file, render_table_file, MulTable, PGroup};

/// One bundled group: a label, a short description, the group file content
/// and the expected order.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: &'static str,
    pub description: &'static str,
    pub content: String,
    pub order: usize,
}

impl CorpusEntry {
    /// Parses and closes the entry into a [`PGroup`].
    pub fn group(&self) -> Result<PGroup> {
        let file = parse_group_file(&self.content)?;
        close_group(&file.generator_permutations()?)
    }
}

/// Loads the bundled corpus, asserting that every entry closes to its
/// declared order. A failure here means the bundle itself is broken.
pub fn load_corpus() -> Vec<CorpusEntry> {
    let entries = build_entries();
    for e in &entries {
        let group = e
            .group()
            .unwrap_or_else(|err| panic!("corpus entry {} failed to load: {err}", e.label));
        assert_eq!(
            group.order(),
            e.order,
            "corpus entry {} closed to order {}, declared {}",
            e.label,
            group.order(),
            e.order
        );
    }
    entries
}

/// Looks up one corpus entry by label.
pub fn corpus_entry(label: &str) -> Option<CorpusEntry> {
    build_entries().into_iter().find(|e| e.label == label)
}

fn perm_file(comment: &str, degree: usize, gens: &[Vec<usize>]) -> String {
    let mut out = format!("# {comment}\nperm {degree} {}\n", gens.len());
    for g in gens {
        let images: Vec<String> = g.iter().map(|i| i.to_string()).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

fn cycle(n: usize) -> Vec<usize> {
    (1..=n).map(|i| i % n + 1).collect()
}

/// Builds a multiplication table over an explicit element list and product
/// law, with the given generators.
fn table_from_law<T: Clone + Eq + Hash>(
    elements: Vec<T>,
    mul: impl Fn(&T, &T) -> T,
    generators: &[T],
) -> MulTable {
    let index: HashMap<T, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    assert_eq!(index.len(), elements.len(), "duplicate elements");
    let rows = elements
        .iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| index[&mul(x, y)])
                .collect::<Vec<usize>>()
        })
        .collect();
    let gens = generators.iter().map(|g| index[g]).collect();
    MulTable::new(rows, gens).expect("law produced a well-formed table")
}

/// Groups <x, y | x^m = 1, y^2 = x^shift, y x y^-1 = x^twist> as pairs
/// (i, s) standing for x^i y^s.
fn two_step_table(m: u32, twist: u32, shift: u32) -> MulTable {
    let elements: Vec<(u32, u32)> = (0..2).flat_map(|s| (0..m).map(move |i| (i, s))).collect();
    let mul = |a: &(u32, u32), b: &(u32, u32)| {
        let (i, s) = *a;
        let (j, t) = *b;
        let tw = if s == 1 { twist } else { 1 };
        let extra = if s == 1 && t == 1 { shift } else { 0 };
        (((i + tw * j) + extra) % m, (s + t) % 2)
    };
    table_from_law(elements, mul, &[(1, 0), (0, 1)])
}

/// The Heisenberg group over F_3: triples (a, b, c) with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'). Extraspecial of order 27
/// and exponent 3.
fn heisenberg27_table() -> MulTable {
    let elements: Vec<(u32, u32, u32)> = (0..3)
        .flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| (a, b, c))))
        .collect();
    let mul = |x: &(u32, u32, u32), y: &(u32, u32, u32)| {
        (
            (x.0 + y.0) % 3,
            (x.1 + y.1) % 3,
            (x.2 + y.2 + x.0 * y.1) % 3,
        )
    };
    table_from_law(elements, mul, &[(1, 0, 0), (0, 1, 0)])
}

/// Cyclic shift of the order-8 elementary abelian part used by
/// [`e8c4_table`]: a -> b -> c -> abc on exponent bit-vectors.
fn e8_shift(v: u8) -> u8 {
    let (a, b, c) = (v & 1, (v >> 1) & 1, (v >> 2) & 1);
    // a contribution -> b, b -> c, c -> abc.
    let na = c;
    let nb = a ^ c;
    let nc = b ^ c;
    na | (nb << 1) | (nc << 2)
}

/// The order-32 semidirect product (C2 x C2 x C2) x| C4: the C4 generator
/// conjugates the elementary abelian part by a -> b -> c -> abc. Elements
/// are pairs (bit-vector, power of the twisting generator).
fn e8c4_table() -> MulTable {
    let elements: Vec<(u8, u8)> = (0..4u8)
        .flat_map(|i| (0..8u8).map(move |v| (v, i)))
        .collect();
    let mul = |x: &(u8, u8), y: &(u8, u8)| {
        let mut w = y.0;
        for _ in 0..x.1 {
            w = e8_shift(w);
        }
        (x.0 ^ w, (x.1 + y.1) % 4)
    };
    table_from_law(elements, mul, &[(1, 0), (0, 1)])
}

fn build_entries() -> Vec<CorpusEntry> {
    let table_entry = |label, description, comment: &str, table: MulTable, order| CorpusEntry {
        label,
        description,
        content: render_table_file(comment, &table),
        order,
    };
    vec![
        CorpusEntry {
            label: "c2",
            description: "cyclic group of order 2",
            content: perm_file("c2", 2, &[cycle(2)]),
            order: 2,
        },
        CorpusEntry {
            label: "c4",
            description: "cyclic group of order 4",
            content: perm_file("c4", 4, &[cycle(4)]),
            order: 4,
        },
        CorpusEntry {
            label: "c8",
            description: "cyclic group of order 8",
            content: perm_file("c8", 8, &[cycle(8)]),
            order: 8,
        },
        CorpusEntry {
            label: "c2c2",
            description: "Klein four group",
            content: perm_file("c2c2", 4, &[vec![2, 1, 4, 3], vec![3, 4, 1, 2]]),
            order: 4,
        },
        CorpusEntry {
            label: "c2c4",
            description: "direct product C2 x C4",
            content: perm_file("c2c4", 6, &[vec![2, 1, 3, 4, 5, 6], vec![1, 2, 4, 5, 6, 3]]),
            order: 8,
        },
        CorpusEntry {
            label: "c2c2c2",
            description: "elementary abelian group of order 8",
            content: perm_file(
                "c2c2c2",
                6,
                &[
                    vec![2, 1, 3, 4, 5, 6],
                    vec![1, 2, 4, 3, 5, 6],
                    vec![1, 2, 3, 4, 6, 5],
                ],
            ),
            order: 8,
        },
        CorpusEntry {
            label: "d8",
            description: "dihedral group of order 8",
            content: perm_file("d8", 4, &[vec![2, 3, 4, 1], vec![3, 2, 1, 4]]),
            order: 8,
        },
        table_entry(
            "q8",
            "quaternion group of order 8",
            "q8",
            two_step_table(4, 3, 2),
            8,
        ),
        CorpusEntry {
            label: "c9",
            description: "cyclic group of order 9",
            content: perm_file("c9", 9, &[cycle(9)]),
            order: 9,
        },
        CorpusEntry {
            label: "c3c3",
            description: "elementary abelian group of order 9",
            content: perm_file("c3c3", 6, &[vec![2, 3, 1, 4, 5, 6], vec![1, 2, 3, 5, 6, 4]]),
            order: 9,
        },
        table_entry(
            "es27",
            "extraspecial group of order 27 and exponent 3 (Heisenberg over F_3)",
            "es27",
            heisenberg27_table(),
            27,
        ),
        table_entry(
            "e8c4",
            "order 32: (C2)^3 extended by C4 acting as a -> b -> c -> abc",
            "e8c4",
            e8c4_table(),
            32,
        ),
        table_entry(
            "d32",
            "dihedral group of order 32",
            "d32",
            two_step_table(16, 15, 0),
            32,
        ),
        table_entry(
            "sd32",
            "semidihedral group of order 32",
            "sd32",
            two_step_table(16, 7, 0),
            32,
        ),
        table_entry(
            "m32",
            "modular group of order 32 (twist x -> x^9)",
            "m32",
            two_step_table(16, 9, 0),
            32,
        ),
        table_entry(
            "q32",
            "generalized quaternion group of order 32",
            "q32",
            two_step_table(16, 15, 8),
            32,
        ),
    ]
}
