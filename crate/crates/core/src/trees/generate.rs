//! Exhaustive generators. Each family is produced as unlabeled shapes
//! combined with every permutation of the labels in preorder, so no
//! duplicate is ever built.

use std::collections::BTreeSet;

use super::{CayleyTree, CompartmentedTree, KaryNode, KaryTree, Node, PlaneTree, TreeError, UnorderedTree};
use crate::bijections::from_cayley;
use crate::words::{next_permutation, EnumerationBound};

fn guard(letters: usize, bound: EnumerationBound) -> Result<(), TreeError> {
    if letters > bound.max_letters {
        return Err(TreeError::TooLarge { letters, bound: bound.max_letters });
    }
    Ok(())
}

/// Ways to write `total` as an ordered sum of `parts` nonnegative integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Cartesian product of lists.
fn product<T: Clone>(lists: &[&[T]]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Unlabeled non-root vertex.
#[derive(Clone, Debug)]
struct Shape {
    compartments: Vec<Vec<Shape>>,
}

/// `forests[m]`: every ordered forest with `m` vertices, each vertex having
/// `slots` compartments.
fn forest_shapes(n: usize, slots: usize) -> Vec<Vec<Vec<Shape>>> {
    let mut forests: Vec<Vec<Vec<Shape>>> = vec![vec![vec![]]];
    let mut nodes: Vec<Vec<Shape>> = vec![vec![]];
    for m in 1..=n {
        let mut here = Vec::new();
        for comp in compositions(m - 1, slots) {
            let lists: Vec<&[Vec<Shape>]> = comp.iter().map(|&c| forests[c].as_slice()).collect();
            for compartments in product(&lists) {
                here.push(Shape { compartments });
            }
        }
        nodes.push(here);
        let mut fs = Vec::new();
        for first in 1..=m {
            for v in &nodes[first] {
                for rest in &forests[m - first] {
                    let mut f = vec![v.clone()];
                    f.extend(rest.iter().cloned());
                    fs.push(f);
                }
            }
        }
        forests.push(fs);
    }
    forests
}

fn label_forest(shapes: &[Shape], labels: &mut impl Iterator<Item = u32>) -> Vec<Node> {
    shapes
        .iter()
        .map(|s| {
            let label = labels.next().expect("one label per vertex");
            Node { label, compartments: s.compartments.iter().map(|c| label_forest(c, labels)).collect() }
        })
        .collect()
}

/// Lazy stream over all of `T^k_n`.
pub struct CompartmentedTrees {
    k: usize,
    n: usize,
    shapes: Vec<Vec<Shape>>,
    index: usize,
    labels: Vec<u32>,
}

impl Iterator for CompartmentedTrees {
    type Item = CompartmentedTree;

    fn next(&mut self) -> Option<CompartmentedTree> {
        let shape = self.shapes.get(self.index)?;
        let children = label_forest(shape, &mut self.labels.iter().copied());
        if !next_permutation(&mut self.labels) {
            self.labels.sort_unstable();
            self.index += 1;
        }
        Some(CompartmentedTree::from_parts_unchecked(self.k, self.n, children))
    }
}

/// Every compartmented tree with `n` edges; there are `n! C_{n,k}` of them.
pub fn enumerate_compartmented(n: usize, k: usize, bound: EnumerationBound) -> Result<CompartmentedTrees, TreeError> {
    if k < 2 {
        return Err(TreeError::InvalidK { k, min: 2 });
    }
    guard(n * k, bound)?;
    let shapes = forest_shapes(n, k - 1).swap_remove(n);
    Ok(CompartmentedTrees { k, n, shapes, index: 0, labels: (1..=n as u32).collect() })
}

/// Every edge-labeled plane tree with `n` edges (`n! C_n` of them).
pub fn enumerate_plane_trees(n: usize, bound: EnumerationBound) -> Result<impl Iterator<Item = PlaneTree>, TreeError> {
    Ok(enumerate_compartmented(n, 2, bound)?.map(PlaneTree))
}

#[derive(Clone, Debug)]
enum KShape {
    Leaf,
    Internal(Vec<KShape>),
}

fn kary_shapes(n: usize, k: usize) -> Vec<KShape> {
    let mut memo: Vec<Vec<KShape>> = vec![vec![KShape::Leaf]];
    for m in 1..=n {
        let mut here = Vec::new();
        for comp in compositions(m - 1, k) {
            let lists: Vec<&[KShape]> = comp.iter().map(|&c| memo[c].as_slice()).collect();
            here.extend(product(&lists).into_iter().map(KShape::Internal));
        }
        memo.push(here);
    }
    memo.swap_remove(n)
}

fn label_kary(shape: &KShape, labels: &mut impl Iterator<Item = u32>) -> KaryNode {
    match shape {
        KShape::Leaf => KaryNode::Leaf,
        KShape::Internal(children) => {
            let label = labels.next().expect("one label per internal vertex");
            KaryNode::Internal { label, children: children.iter().map(|c| label_kary(c, labels)).collect() }
        }
    }
}

/// Lazy stream over all of `A^k_n`.
pub struct KaryTrees {
    k: usize,
    n: usize,
    shapes: Vec<KShape>,
    index: usize,
    labels: Vec<u32>,
}

impl Iterator for KaryTrees {
    type Item = KaryTree;

    fn next(&mut self) -> Option<KaryTree> {
        let shape = self.shapes.get(self.index)?;
        let root = label_kary(shape, &mut self.labels.iter().copied());
        if !next_permutation(&mut self.labels) {
            self.labels.sort_unstable();
            self.index += 1;
        }
        Some(KaryTree::from_parts_unchecked(self.k, self.n, root))
    }
}

/// Every k-ary tree with `n` labeled internal vertices (`n! C_{n,k}`).
pub fn enumerate_kary(n: usize, k: usize, bound: EnumerationBound) -> Result<KaryTrees, TreeError> {
    if k < 1 {
        return Err(TreeError::InvalidK { k, min: 1 });
    }
    guard(n * k, bound)?;
    Ok(KaryTrees { k, n, shapes: kary_shapes(n, k), index: 0, labels: (1..=n as u32).collect() })
}

/// Tree on `1..=vertices` with the given Prüfer sequence.
fn prufer_decode(vertices: usize, seq: &[u32]) -> CayleyTree {
    let mut degree = vec![1usize; vertices + 1];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut edges = BTreeSet::new();
    for &x in seq {
        let leaf = (1..=vertices).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.insert((leaf.min(x as usize) as u32, leaf.max(x as usize) as u32));
        degree[leaf] -= 1;
        degree[x as usize] -= 1;
    }
    let rest: Vec<u32> = (1..=vertices).filter(|&v| degree[v] == 1).map(|v| v as u32).collect();
    if let [a, b] = rest[..] {
        edges.insert((a, b));
    }
    CayleyTree::from_edges_unchecked(vertices, edges)
}

/// Every labeled tree on `1..=vertices` (`vertices^(vertices-2)` of them),
/// in lexicographic order of Prüfer sequences.
pub fn enumerate_cayley(vertices: usize) -> impl Iterator<Item = CayleyTree> {
    let len = vertices.saturating_sub(2);
    let mut seq: Option<Vec<u32>> = (vertices > 0).then(|| vec![1; len]);
    std::iter::from_fn(move || {
        let cur = seq.take()?;
        let tree = prufer_decode(vertices, &cur);
        let mut next = cur;
        let mut i = len;
        while i > 0 {
            i -= 1;
            if (next[i] as usize) < vertices {
                next[i] += 1;
                seq = Some(next);
                break;
            }
            next[i] = 1;
        }
        Some(tree)
    })
}

/// Every unordered edge-labeled rooted tree with `n` edges, via Cayley trees
/// on `n + 1` vertices rooted at `n + 1`.
pub fn enumerate_unordered(
    n: usize,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = UnorderedTree>, TreeError> {
    guard(2 * n, bound)?;
    Ok(enumerate_cayley(n + 1).map(|c| from_cayley(&c).expect("root n + 1 exists")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::numbers::{factorial, k_catalan};
    use std::collections::HashSet;

    fn count(n: usize, k: usize) -> usize {
        let c = factorial(n) * k_catalan(n, k);
        c.try_into().unwrap()
    }

    #[test]
    fn compartmented_counts() {
        let b = EnumerationBound::default();
        for (n, k) in [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4), (3, 4)] {
            let trees: Vec<_> = enumerate_compartmented(n, k, b).unwrap().collect();
            assert_eq!(trees.len(), count(n, k), "n={n} k={k}");
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
            for t in &trees {
                assert_eq!(CompartmentedTree::new(k, t.root_children().to_vec()).as_ref(), Ok(t));
            }
        }
        assert_eq!(enumerate_plane_trees(2, b).unwrap().count(), 4);
        assert_eq!(enumerate_compartmented(1, 5, b).unwrap().count(), 1);
    }

    #[test]
    fn kary_counts() {
        let b = EnumerationBound::default();
        assert_eq!(enumerate_kary(2, 3, b).unwrap().count(), 6);
        for (n, k) in [(0, 2), (1, 2), (3, 2), (4, 2), (3, 3), (2, 4), (4, 1)] {
            let trees: Vec<_> = enumerate_kary(n, k, b).unwrap().collect();
            assert_eq!(trees.len(), count(n, k), "n={n} k={k}");
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn cayley_and_unordered_counts() {
        assert_eq!(enumerate_cayley(1).count(), 1);
        assert_eq!(enumerate_cayley(2).count(), 1);
        let trees: HashSet<_> = enumerate_cayley(5).collect();
        assert_eq!(trees.len(), 125);
        let b = EnumerationBound::default();
        for n in 0..6usize {
            let us: HashSet<_> = enumerate_unordered(n, b).unwrap().collect();
            assert_eq!(us.len(), (n + 1).pow(n.saturating_sub(1) as u32), "n={n}");
        }
    }

    #[test]
    fn guard_rejects_large_sizes() {
        let b = EnumerationBound::new(8);
        assert!(matches!(enumerate_compartmented(5, 2, b), Err(TreeError::TooLarge { letters: 10, bound: 8 })));
        assert!(enumerate_kary(3, 3, b).is_err());
        assert!(enumerate_compartmented(2, 1, b).is_err());
    }
}
