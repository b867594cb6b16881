//! Text format for trees.
//!
//! Edge-labeled trees are written `(4(1),6,3(7,5(8),2))`: the outer
//! parentheses are the root, a vertex is its label followed by its children
//! in parentheses, and compartments are separated by `|`. A vertex with no
//! children is written as its bare label. k-ary trees are written
//! `4(3(.,.),.)` with `.` for a leaf.

use std::fmt;
use std::str::FromStr;

use super::{CayleyTree, CompartmentedTree, KaryNode, KaryTree, Node, PlaneTree, TreeError, UNode, UnorderedTree};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> TreeError {
        TreeError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), TreeError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn number(&mut self) -> Result<u32, TreeError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| TreeError::Parse { pos: start, msg: "expected a label".into() })
    }

    fn finish(&mut self) -> Result<(), TreeError> {
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(())
    }

    /// Nodes separated by `,` up to (not including) `)` or `|`.
    fn forest(&mut self, slots: usize) -> Result<Vec<Node>, TreeError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Some(b')') | Some(b'|')) {
            return Ok(out);
        }
        loop {
            out.push(self.node(slots)?);
            if !self.eat(b',') {
                return Ok(out);
            }
        }
    }

    fn node(&mut self, slots: usize) -> Result<Node, TreeError> {
        let label = self.number()?;
        if !self.eat(b'(') {
            return Ok(Node::leaf(label, slots));
        }
        let mut compartments = vec![self.forest(slots)?];
        while self.eat(b'|') {
            compartments.push(self.forest(slots)?);
        }
        self.expect(b')')?;
        if compartments.len() != slots {
            return Err(TreeError::Compartments { label, found: compartments.len(), expected: slots });
        }
        Ok(Node { label, compartments })
    }

    fn kary(&mut self) -> Result<KaryNode, TreeError> {
        if self.eat(b'.') {
            return Ok(KaryNode::Leaf);
        }
        let label = self.number()?;
        self.expect(b'(')?;
        let mut children = vec![self.kary()?];
        while self.eat(b',') {
            children.push(self.kary()?);
        }
        self.expect(b')')?;
        Ok(KaryNode::Internal { label, children })
    }
}

fn write_forest(f: &mut fmt::Formatter<'_>, nodes: &[Node]) -> fmt::Result {
    for (i, v) in nodes.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", v.label)?;
        if !v.is_leaf() {
            f.write_str("(")?;
            for (j, comp) in v.compartments.iter().enumerate() {
                if j > 0 {
                    f.write_str("|")?;
                }
                write_forest(f, comp)?;
            }
            f.write_str(")")?;
        }
    }
    Ok(())
}

impl CompartmentedTree {
    /// Parses the text format for a given `k`.
    pub fn parse(s: &str, k: usize) -> Result<Self, TreeError> {
        if k < 2 {
            return Err(TreeError::InvalidK { k, min: 2 });
        }
        let mut p = Parser::new(s);
        p.expect(b'(')?;
        let children = p.forest(k - 1)?;
        p.expect(b')')?;
        p.finish()?;
        CompartmentedTree::new(k, children)
    }
}

impl fmt::Display for CompartmentedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_forest(f, &self.children)?;
        f.write_str(")")
    }
}

/// Parses a plane tree (`k = 2`).
impl FromStr for CompartmentedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        CompartmentedTree::parse(s, 2)
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for PlaneTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        CompartmentedTree::parse(s, 2).map(PlaneTree)
    }
}

impl KaryTree {
    pub fn parse(s: &str, k: usize) -> Result<Self, TreeError> {
        let mut p = Parser::new(s);
        let root = p.kary()?;
        p.finish()?;
        KaryTree::new(k, root)
    }
}

fn write_kary(f: &mut fmt::Formatter<'_>, v: &KaryNode) -> fmt::Result {
    match v {
        KaryNode::Leaf => f.write_str("."),
        KaryNode::Internal { label, children } => {
            write!(f, "{label}(")?;
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write_kary(f, c)?;
            }
            f.write_str(")")
        }
    }
}

impl fmt::Display for KaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_kary(f, &self.root)
    }
}

fn to_unodes(nodes: Vec<Node>) -> Vec<UNode> {
    nodes
        .into_iter()
        .map(|v| UNode { label: v.label, children: to_unodes(v.compartments.into_iter().flatten().collect()) })
        .collect()
}

fn write_unodes(f: &mut fmt::Formatter<'_>, nodes: &[UNode]) -> fmt::Result {
    for (i, v) in nodes.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", v.label)?;
        if !v.children.is_empty() {
            f.write_str("(")?;
            write_unodes(f, &v.children)?;
            f.write_str(")")?;
        }
    }
    Ok(())
}

/// Same syntax as plane trees; children are printed in canonical order.
impl fmt::Display for UnorderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_unodes(f, &self.children)?;
        f.write_str(")")
    }
}

impl FromStr for UnorderedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        let mut p = Parser::new(s);
        p.expect(b'(')?;
        let children = p.forest(1)?;
        p.expect(b')')?;
        p.finish()?;
        UnorderedTree::new(to_unodes(children))
    }
}

/// Edge list such as `1-4 3-9 4-9`.
impl fmt::Display for CayleyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["()", "(1)", "(4(1),6,3(7,5(8),2))", "(2(1))"] {
            assert_eq!(s.parse::<CompartmentedTree>().unwrap().to_string(), s);
        }
        let t = CompartmentedTree::parse(" ( 6(2|), 3(5|7(|4),1) ) ", 3).unwrap();
        assert_eq!(t.to_string(), "(6(2|),3(5|7(|4),1))");
        let a = KaryTree::parse("4(3(2(.,.),7(6(.,.),5(.,.))),1(.,.))", 2).unwrap();
        assert_eq!(a.to_string(), "4(3(2(.,.),7(6(.,.),5(.,.))),1(.,.))");
        assert_eq!(KaryTree::parse(".", 3).unwrap().n(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("(1(2|3))".parse::<CompartmentedTree>(), Err(TreeError::Compartments { .. })));
        assert!(matches!("(1,".parse::<CompartmentedTree>(), Err(TreeError::Parse { .. })));
        assert!(matches!("(1)x".parse::<CompartmentedTree>(), Err(TreeError::Parse { .. })));
        assert!(matches!("(1,1)".parse::<CompartmentedTree>(), Err(TreeError::Labels(_))));
        assert!(KaryTree::parse("1(.)", 2).is_err());
    }

    #[test]
    fn unordered_text_is_canonical() {
        let u: UnorderedTree = "(3(7,5(8),2),6,4(1))".parse().unwrap();
        assert_eq!(u.to_string(), "(4(1),3(2,5(8),7),6)");
    }
}
