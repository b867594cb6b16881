//! Edge-labeled plane trees, compartmented trees, vertex-labeled k-ary trees
//! and unordered trees, with their statistics and exhaustive generators.
//!
//! Every non-root vertex of a [`CompartmentedTree`] splits its children into
//! `k - 1` ordered compartments. With `k = 2` there is one compartment and
//! the tree is an ordinary plane tree.

mod generate;
mod text;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::words::{ascents, cyclic_ascents, cyclic_descents, descents};

pub use generate::{
    enumerate_cayley, enumerate_compartmented, enumerate_kary, enumerate_plane_trees, enumerate_unordered,
    CompartmentedTrees, KaryTrees,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },
    #[error("labels {0:?} are not a permutation of 1..n")]
    Labels(Vec<u32>),
    #[error("vertex {label} has {found} compartments, expected {expected}")]
    Compartments { label: u32, found: usize, expected: usize },
    #[error("vertex {label} has {found} children, expected 0 or {expected}")]
    Arity { label: u32, found: usize, expected: usize },
    #[error("the root must have exactly one child, found {0}")]
    NotSingleChildRoot(usize),
    #[error("expected {expected} parts, got {found}")]
    Parts { found: usize, expected: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("refusing to enumerate {letters} letters; the bound is {bound}")]
    TooLarge { letters: usize, bound: usize },
}

/// A non-root vertex, identified by the label of the edge to its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub label: u32,
    pub compartments: Vec<Vec<Node>>,
}

impl Node {
    /// A vertex with `slots` empty compartments.
    pub fn leaf(label: u32, slots: usize) -> Self {
        Node { label, compartments: vec![Vec::new(); slots] }
    }

    pub fn is_leaf(&self) -> bool {
        self.compartments.iter().all(Vec::is_empty)
    }

    pub fn children(&self) -> impl Iterator<Item = &Node> {
        self.compartments.iter().flatten()
    }

    /// The counterclockwise label sequence around this vertex:
    /// `label, compartment_1, label, compartment_2, ...`.
    fn local_word(&self) -> Vec<u32> {
        let mut w = Vec::new();
        for comp in &self.compartments {
            w.push(self.label);
            w.extend(comp.iter().map(|c| c.label));
        }
        if w.is_empty() {
            w.push(self.label);
        }
        w
    }

    fn walk<'a>(&'a self, out: &mut Vec<&'a Node>) {
        out.push(self);
        for c in self.children() {
            c.walk(out);
        }
    }
}

fn preorder(children: &[Node]) -> Vec<&Node> {
    let mut out = Vec::new();
    for c in children {
        c.walk(&mut out);
    }
    out
}

fn check_labels(labels: impl Iterator<Item = u32>) -> Result<usize, TreeError> {
    let mut v: Vec<u32> = labels.collect();
    v.sort_unstable();
    if v.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
        return Err(TreeError::Labels(v));
    }
    Ok(v.len())
}

/// Rooted tree whose root children form a single ordered list and whose
/// other vertices have `k - 1` compartments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompartmentedTree {
    k: usize,
    n: usize,
    children: Vec<Node>,
}

impl CompartmentedTree {
    pub fn new(k: usize, children: Vec<Node>) -> Result<Self, TreeError> {
        if k < 2 {
            return Err(TreeError::InvalidK { k, min: 2 });
        }
        let nodes = preorder(&children);
        for v in &nodes {
            if v.compartments.len() != k - 1 {
                return Err(TreeError::Compartments { label: v.label, found: v.compartments.len(), expected: k - 1 });
            }
        }
        let n = check_labels(nodes.iter().map(|v| v.label))?;
        Ok(CompartmentedTree { k, n, children })
    }

    pub(crate) fn from_parts_unchecked(k: usize, n: usize, children: Vec<Node>) -> Self {
        CompartmentedTree { k, n, children }
    }

    /// The tree with no edges.
    pub fn empty(k: usize) -> Self {
        CompartmentedTree { k, n: 0, children: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root_children(&self) -> &[Node] {
        &self.children
    }

    pub fn vertices(&self) -> Vec<&Node> {
        preorder(&self.children)
    }

    fn root_labels(&self) -> Vec<u32> {
        self.children.iter().map(|c| c.label).collect()
    }

    /// Cyclic descents summed over vertices. The root contributes the
    /// descents of its child labels, last position included.
    pub fn cdes(&self) -> usize {
        descents(&self.root_labels()) + self.vertices().iter().map(|v| cyclic_descents(&v.local_word())).sum::<usize>()
    }

    /// Cyclic ascents summed over vertices. The root contributes the ascents
    /// of its child labels, position 0 included.
    pub fn casc(&self) -> usize {
        ascents(&self.root_labels()) + self.vertices().iter().map(|v| cyclic_ascents(&v.local_word())).sum::<usize>()
    }

    /// Number of empty compartments over all non-root vertices.
    pub fn empty_compartments(&self) -> usize {
        self.vertices().iter().map(|v| v.compartments.iter().filter(|c| c.is_empty()).count()).sum()
    }

    /// Number of childless non-root vertices.
    pub fn leaves(&self) -> usize {
        self.vertices().iter().filter(|v| v.is_leaf()).count()
    }

    /// Labels strictly increase along every path away from the root.
    pub fn is_increasing(&self) -> bool {
        self.vertices().iter().all(|v| v.children().all(|c| c.label > v.label))
    }

    /// Adds `i` modulo `n` to every label. The root must have one child.
    pub fn rotate_labels(&self, i: usize) -> Result<Self, TreeError> {
        if self.children.len() != 1 {
            return Err(TreeError::NotSingleChildRoot(self.children.len()));
        }
        let n = self.n as u32;
        let shift = (i % self.n) as u32;
        fn go(v: &Node, n: u32, shift: u32) -> Node {
            Node {
                label: (v.label - 1 + shift) % n + 1,
                compartments: v.compartments.iter().map(|c| c.iter().map(|x| go(x, n, shift)).collect()).collect(),
            }
        }
        let children = self.children.iter().map(|c| go(c, n, shift)).collect();
        Ok(CompartmentedTree { children, ..*self })
    }

    /// Hangs the `k - 1` parts below a new vertex labeled `n`, which becomes
    /// the only child of a new root. Each part's labels are shifted past
    /// those of the parts before it, so the parts stay order-isomorphic.
    pub fn attach_root(k: usize, parts: &[CompartmentedTree]) -> Result<Self, TreeError> {
        if k < 2 {
            return Err(TreeError::InvalidK { k, min: 2 });
        }
        if parts.len() != k - 1 {
            return Err(TreeError::Parts { found: parts.len(), expected: k - 1 });
        }
        if let Some(p) = parts.iter().find(|p| p.k != k) {
            return Err(TreeError::InvalidK { k: p.k, min: k });
        }
        fn shifted(v: &Node, by: u32) -> Node {
            Node {
                label: v.label + by,
                compartments: v.compartments.iter().map(|c| c.iter().map(|x| shifted(x, by)).collect()).collect(),
            }
        }
        let mut offset = 0;
        let mut compartments = Vec::with_capacity(parts.len());
        for p in parts {
            compartments.push(p.children.iter().map(|c| shifted(c, offset)).collect());
            offset += p.n as u32;
        }
        let top = Node { label: offset + 1, compartments };
        CompartmentedTree::new(k, vec![top])
    }
}

/// An edge-labeled plane tree: a compartmented tree with `k = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree(CompartmentedTree);

impl PlaneTree {
    pub fn new(children: Vec<Node>) -> Result<Self, TreeError> {
        CompartmentedTree::new(2, children).map(PlaneTree)
    }

    pub fn as_compartmented(&self) -> &CompartmentedTree {
        &self.0
    }

    pub fn into_compartmented(self) -> CompartmentedTree {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn cdes(&self) -> usize {
        self.0.cdes()
    }

    pub fn casc(&self) -> usize {
        self.0.casc()
    }

    pub fn leaves(&self) -> usize {
        self.0.leaves()
    }
}

impl TryFrom<CompartmentedTree> for PlaneTree {
    type Error = TreeError;

    fn try_from(t: CompartmentedTree) -> Result<Self, TreeError> {
        if t.k != 2 {
            return Err(TreeError::InvalidK { k: t.k, min: 2 });
        }
        Ok(PlaneTree(t))
    }
}

/// Vertex of a k-ary tree: a leaf or an internal vertex with exactly `k`
/// ordered children.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KaryNode {
    Leaf,
    Internal { label: u32, children: Vec<KaryNode> },
}

impl KaryNode {
    fn labels(&self, out: &mut Vec<u32>) {
        if let KaryNode::Internal { label, children } = self {
            out.push(*label);
            for c in children {
                c.labels(out);
            }
        }
    }

    fn check_arity(&self, k: usize) -> Result<(), TreeError> {
        if let KaryNode::Internal { label, children } = self {
            if children.len() != k {
                return Err(TreeError::Arity { label: *label, found: children.len(), expected: k });
            }
            children.iter().try_for_each(|c| c.check_arity(k))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KaryTree {
    k: usize,
    n: usize,
    root: KaryNode,
}

impl KaryTree {
    pub fn new(k: usize, root: KaryNode) -> Result<Self, TreeError> {
        if k < 1 {
            return Err(TreeError::InvalidK { k, min: 1 });
        }
        root.check_arity(k)?;
        let mut labels = Vec::new();
        root.labels(&mut labels);
        let n = check_labels(labels.into_iter())?;
        Ok(KaryTree { k, n, root })
    }

    pub(crate) fn from_parts_unchecked(k: usize, n: usize, root: KaryNode) -> Self {
        KaryTree { k, n, root }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of internal vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> &KaryNode {
        &self.root
    }
}

/// Vertex of an unordered tree; children are kept sorted by the smallest
/// label in their subtree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UNode {
    pub label: u32,
    pub children: Vec<UNode>,
}

impl UNode {
    fn min_label(&self) -> u32 {
        self.children.iter().map(UNode::min_label).fold(self.label, u32::min)
    }

    fn canonicalize(&mut self) {
        canonicalize(&mut self.children);
    }

    fn labels(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for c in &self.children {
            c.labels(out);
        }
    }
}

fn canonicalize(nodes: &mut [UNode]) {
    for c in nodes.iter_mut() {
        c.canonicalize();
    }
    nodes.sort_by_key(UNode::min_label);
}

/// Edge-labeled rooted tree with no order on children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorderedTree {
    n: usize,
    children: Vec<UNode>,
}

impl UnorderedTree {
    pub fn new(mut children: Vec<UNode>) -> Result<Self, TreeError> {
        let mut labels = Vec::new();
        for c in &children {
            c.labels(&mut labels);
        }
        let n = check_labels(labels.into_iter())?;
        canonicalize(&mut children);
        Ok(UnorderedTree { n, children })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root_children(&self) -> &[UNode] {
        &self.children
    }
}

/// Vertex-labeled unrooted tree on `1..=vertices`, stored as a sorted edge
/// list with each edge written `(smaller, larger)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTree {
    vertices: usize,
    edges: BTreeSet<(u32, u32)>,
}

impl CayleyTree {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, TreeError> {
        let edges: BTreeSet<(u32, u32)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let bad = |msg: &str| TreeError::Parse { pos: 0, msg: msg.to_string() };
        if vertices == 0 || edges.len() + 1 != vertices {
            return Err(bad("a tree on v vertices has v - 1 edges"));
        }
        if edges.iter().any(|&(a, b)| a == 0 || b as usize > vertices || a == b) {
            return Err(bad("edge endpoint out of range"));
        }
        let t = CayleyTree { vertices, edges };
        let mut seen = vec![false; vertices + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let adj = t.neighbours();
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(bad("graph is not connected"));
        }
        Ok(t)
    }

    pub(crate) fn from_edges_unchecked(vertices: usize, edges: BTreeSet<(u32, u32)>) -> Self {
        CayleyTree { vertices, edges }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    /// Adjacency lists indexed by vertex (index 0 unused).
    pub fn neighbours(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }
}
