//! Maps between trees and words: the depth-first reading `phi` of
//! compartmented trees, the k-ary reading `psi`, and the passage from
//! unordered trees to plane trees of maximal cyclic descent and to Cayley
//! trees.

use thiserror::Error;

use crate::trees::{
    enumerate_unordered, CayleyTree, CompartmentedTree, KaryNode, KaryTree, Node, PlaneTree, TreeError, UNode,
    UnorderedTree,
};
use crate::words::{EnumerationBound, MultisetWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{word} is not quasi-Stirling: positions ({}, {}, {}, {}) form a 1212 or 2121 pattern", .at[0], .at[1], .at[2], .at[3])]
    Crossing { word: String, at: [usize; 4] },
    #[error("multiplicity k = {0} is not supported here")]
    InvalidK(usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn check_noncrossing(w: &MultisetWord) -> Result<(), BijectionError> {
    match w.find_crossing() {
        Some(at) => Err(BijectionError::Crossing { word: w.to_string(), at }),
        None => Ok(()),
    }
}

/// Depth-first walk: an edge label is written when the edge is first
/// traversed, after each compartment of its lower vertex, so `k` times in all.
pub fn phi(t: &CompartmentedTree) -> MultisetWord {
    fn go(v: &Node, out: &mut Vec<u32>) {
        out.push(v.label);
        for comp in &v.compartments {
            for c in comp {
                go(c, out);
            }
            out.push(v.label);
        }
    }
    let mut out = Vec::with_capacity(t.n() * t.k());
    for c in t.root_children() {
        go(c, &mut out);
    }
    MultisetWord::from_parts_unchecked(out, t.n(), t.k())
}

/// Positions of the `k` copies of `w[0]`, which must all be present.
fn copies(w: &[u32], letter: u32, k: usize) -> Vec<usize> {
    w.iter().enumerate().filter(|(_, &x)| x == letter).map(|(i, _)| i).take(k).collect()
}

/// Splits `w = a s_1 a s_2 ... a s_{k-1} a s_k`; the vertex `a` gets
/// compartments `s_1..s_{k-1}` and `s_k` holds its later siblings.
fn decode_forest(mut w: &[u32], k: usize) -> Vec<Node> {
    let mut out = Vec::new();
    while let Some(&a) = w.first() {
        let pos = copies(w, a, k);
        let compartments = pos.windows(2).map(|p| decode_forest(&w[p[0] + 1..p[1]], k)).collect();
        out.push(Node { label: a, compartments });
        w = &w[pos[k - 1] + 1..];
    }
    out
}

/// Inverse of [`phi`].
pub fn phi_inv(w: &MultisetWord) -> Result<CompartmentedTree, BijectionError> {
    if w.k() < 2 {
        return Err(BijectionError::InvalidK(w.k()));
    }
    check_noncrossing(w)?;
    let children = decode_forest(w.entries(), w.k());
    Ok(CompartmentedTree::from_parts_unchecked(w.k(), w.n(), children))
}

/// Records a vertex each time the walk returns to it from a child.
pub fn psi(t: &KaryTree) -> MultisetWord {
    fn go(v: &KaryNode, out: &mut Vec<u32>) {
        if let KaryNode::Internal { label, children } = v {
            for c in children {
                go(c, out);
                out.push(*label);
            }
        }
    }
    let mut out = Vec::with_capacity(t.n() * t.k());
    go(t.root(), &mut out);
    MultisetWord::from_parts_unchecked(out, t.n(), t.k())
}

/// Inverse of [`psi`]: with `b` the last letter, `w = s_1 b s_2 b ... s_k b`.
pub fn psi_inv(w: &MultisetWord) -> Result<KaryTree, BijectionError> {
    if w.k() < 1 {
        return Err(BijectionError::InvalidK(w.k()));
    }
    check_noncrossing(w)?;
    fn go(w: &[u32], k: usize) -> KaryNode {
        let Some(&b) = w.last() else {
            return KaryNode::Leaf;
        };
        let pos = copies(w, b, k);
        let mut start = 0;
        let children = pos
            .iter()
            .map(|&p| {
                let c = go(&w[start..p], k);
                start = p + 1;
                c
            })
            .collect();
        KaryNode::Internal { label: b, children }
    }
    let root = go(w.entries(), w.k());
    Ok(KaryTree::new(w.k(), root)?)
}

/// The unique ordering of `u` in which every vertex has as many cyclic
/// descents as children. Root children are in decreasing order; below an
/// edge labeled `a`, children smaller than `a` come first, then the larger
/// ones, each group decreasing.
pub fn canonical_plane(u: &UnorderedTree) -> PlaneTree {
    fn order(children: &[UNode], parent: Option<u32>) -> Vec<Node> {
        let mut sorted: Vec<&UNode> = children.iter().collect();
        sorted.sort_by_key(|c| std::cmp::Reverse(c.label));
        if let Some(a) = parent {
            sorted.sort_by_key(|c| c.label > a);
        }
        sorted
            .into_iter()
            .map(|c| Node { label: c.label, compartments: vec![order(&c.children, Some(c.label))] })
            .collect()
    }
    let children = order(u.root_children(), None);
    PlaneTree::try_from(CompartmentedTree::from_parts_unchecked(2, u.n(), children)).expect("k = 2")
}

pub fn forget_order(t: &PlaneTree) -> UnorderedTree {
    fn go(nodes: &[Node]) -> Vec<UNode> {
        nodes
            .iter()
            .map(|v| UNode { label: v.label, children: go(&v.children().cloned().collect::<Vec<_>>()) })
            .collect()
    }
    UnorderedTree::new(go(t.as_compartmented().root_children())).expect("labels already valid")
}

/// Moves each edge label to the endpoint away from the root and labels the
/// root `n + 1`.
pub fn to_cayley(u: &UnorderedTree) -> CayleyTree {
    fn go(parent: u32, nodes: &[UNode], out: &mut Vec<(u32, u32)>) {
        for v in nodes {
            out.push((parent, v.label));
            go(v.label, &v.children, out);
        }
    }
    let mut edges = Vec::new();
    go(u.n() as u32 + 1, u.root_children(), &mut edges);
    CayleyTree::new(u.n() + 1, edges).expect("an unordered tree is connected")
}

/// Inverse of [`to_cayley`]: roots the tree at its largest vertex.
pub fn from_cayley(c: &CayleyTree) -> Result<UnorderedTree, TreeError> {
    let adj = c.neighbours();
    fn go(v: u32, parent: u32, adj: &[Vec<u32>]) -> Vec<UNode> {
        adj[v as usize].iter().filter(|&&w| w != parent).map(|&w| UNode { label: w, children: go(w, v, adj) }).collect()
    }
    let root = c.vertices() as u32;
    UnorderedTree::new(go(root, 0, &adj))
}

/// The words of `Q̄_n` with `n` descents, one per unordered tree.
pub fn max_descent_words(n: usize, bound: EnumerationBound) -> Result<impl Iterator<Item = MultisetWord>, TreeError> {
    Ok(enumerate_unordered(n, bound)?.map(|u| phi(canonical_plane(&u).as_compartmented())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_compartmented, enumerate_kary, enumerate_plane_trees};
    use crate::words::{enumerate_k_stirling, StatTriple};
    use std::collections::{BTreeSet, HashSet};

    fn digits(s: &str) -> MultisetWord {
        MultisetWord::from_entries(s.chars().map(|c| c.to_digit(10).unwrap()).collect()).unwrap()
    }

    fn plane_sample() -> CompartmentedTree {
        "(4(1),6,3(7,5(8),2))".parse().unwrap()
    }

    fn ternary_sample() -> CompartmentedTree {
        CompartmentedTree::parse("(6(2|),3(5|7(|4),1))", 3).unwrap()
    }

    #[test]
    fn phi_on_samples() {
        assert_eq!(phi(&plane_sample()), digits("4114663775885223"));
        assert_eq!(phi(&ternary_sample()), digits("622266355537744471113"));
        assert_eq!(phi_inv(&digits("4114663775885223")).unwrap(), plane_sample());
        assert_eq!(phi_inv(&digits("622266355537744471113")).unwrap(), ternary_sample());
        for k in 2..5 {
            let single = CompartmentedTree::new(k, vec![Node::leaf(1, k - 1)]).unwrap();
            assert_eq!(phi(&single).entries(), vec![1; k].as_slice());
        }
        assert_eq!(phi_inv(&digits("1122")).unwrap().to_string(), "(1,2)");
        assert_eq!(phi_inv(&digits("1221")).unwrap().to_string(), "(1(2))");
    }

    #[test]
    fn phi_inv_reports_the_crossing() {
        let err = phi_inv(&"1,2,1,2".parse().unwrap()).unwrap_err();
        assert_eq!(err, BijectionError::Crossing { word: "1,2,1,2".into(), at: [1, 2, 3, 4] });
        assert!(err.to_string().contains("(1, 2, 3, 4)"));
        assert!(phi_inv(&"1,2".parse().unwrap()).is_err());
    }

    #[test]
    fn psi_on_samples() {
        let upper = KaryTree::parse("4(3(2(.,.),7(6(.,.),5(.,.))),1(.,.))", 2).unwrap();
        assert_eq!(psi(&upper), digits("22366755734114"));
        assert_eq!(psi_inv(&digits("22366755734114")).unwrap(), upper);
        let lower = KaryTree::parse("3(6(.,2(.,.,.),.),5(.,.,.),1(7(.,.,4(.,.,.)),.,.))", 3).unwrap();
        assert_eq!(psi(&lower), digits("622266355537744471113"));
        assert_eq!(psi_inv(&digits("622266355537744471113")).unwrap(), lower);
        for k in 1..5 {
            let single = KaryTree::new(k, KaryNode::Internal { label: 1, children: vec![KaryNode::Leaf; k] }).unwrap();
            assert_eq!(psi(&single).entries(), vec![1; k].as_slice());
        }
    }

    #[test]
    fn round_trips_and_images() {
        let b = EnumerationBound::default();
        for (n, k) in [(3, 2), (4, 2), (2, 3), (3, 3), (2, 4), (3, 4)] {
            let mut from_phi = BTreeSet::new();
            for t in enumerate_compartmented(n, k, b).unwrap() {
                let w = phi(&t);
                assert_eq!(phi_inv(&w).unwrap(), t);
                from_phi.insert(w);
            }
            let mut from_psi = BTreeSet::new();
            for t in enumerate_kary(n, k, b).unwrap() {
                let w = psi(&t);
                assert_eq!(psi_inv(&w).unwrap(), t);
                from_psi.insert(w);
            }
            assert_eq!(from_phi, from_psi, "n={n} k={k}");
        }
    }

    #[test]
    fn statistic_transport_small() {
        let b = EnumerationBound::default();
        for (n, k) in [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)] {
            for t in enumerate_compartmented(n, k, b).unwrap() {
                let expected = StatTriple { asc: t.casc(), des: t.cdes(), plat: t.empty_compartments() };
                assert_eq!(phi(&t).statistics(), expected, "{t}");
            }
        }
        let t = plane_sample();
        assert_eq!(phi(&t).statistics().plat, t.leaves());
        assert_eq!(phi(&t).statistics().asc, t.casc());
    }

    #[test]
    fn increasing_trees_give_stirling_words() {
        let b = EnumerationBound::default();
        for (n, k) in [(3, 2), (4, 2), (3, 3), (2, 4)] {
            let from_trees: BTreeSet<_> =
                enumerate_compartmented(n, k, b).unwrap().filter(|t| t.is_increasing()).map(|t| phi(&t)).collect();
            let direct: BTreeSet<_> = enumerate_k_stirling(n, k, b).unwrap().collect();
            assert_eq!(from_trees, direct);
        }
    }

    #[test]
    fn canonical_and_cayley_sample() {
        let u = forget_order(&PlaneTree::try_from(plane_sample()).unwrap());
        let right = canonical_plane(&u);
        assert_eq!(right.to_string(), "(6,4(1),3(2,7,5(8)))");
        assert_eq!(right.cdes(), 8);
        let left = to_cayley(&u);
        assert_eq!(left.to_string(), "1-4 2-3 3-5 3-7 3-9 4-9 5-8 6-9");
        assert_eq!(from_cayley(&left).unwrap(), u);
    }

    #[test]
    fn canonical_plane_is_maximal_and_inverts_forgetting() {
        let b = EnumerationBound::default();
        for n in 0..=5 {
            let mut seen = HashSet::new();
            for u in enumerate_unordered(n, b).unwrap() {
                let p = canonical_plane(&u);
                assert_eq!(p.cdes(), n);
                assert_eq!(forget_order(&p), u);
                assert_eq!(from_cayley(&to_cayley(&u)).unwrap(), u);
                seen.insert(to_cayley(&u));
            }
            assert_eq!(seen.len(), (n + 1).pow(n.saturating_sub(1) as u32));
        }
        for n in 1..=4 {
            let maximal: Vec<_> = enumerate_plane_trees(n, b).unwrap().filter(|t| t.cdes() == n).collect();
            let images: HashSet<_> = maximal.iter().map(forget_order).collect();
            assert_eq!(images.len(), maximal.len());
            for t in &maximal {
                assert_eq!(&canonical_plane(&forget_order(t)), t);
            }
        }
    }

    #[test]
    fn max_descent_examples() {
        let b = EnumerationBound::default();
        let one: Vec<_> = max_descent_words(1, b).unwrap().collect();
        assert_eq!(one, vec![digits("11")]);
        let two: Vec<_> = max_descent_words(2, b).unwrap().collect();
        assert_eq!(two.len(), 3);
        assert!(two.iter().all(|w| w.statistics().des == 2));
        let three: HashSet<_> = max_descent_words(3, b).unwrap().collect();
        assert_eq!(three.len(), 16);
        assert!(three.iter().all(|w| w.statistics().des == 3));
    }
}
