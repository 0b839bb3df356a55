//! Argument trees of canonical undercuts and the tree-based inconsistency measures.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::deductive::{enumerate_arguments_with, ClassicalArgument};
use crate::error::{Error, Result};
use crate::logic::{Formula, KnowledgeBase};
use crate::par::Config;
use crate::value::MeasureValue;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub argument: ClassicalArgument,
    pub parent: Option<usize>,
    /// Root depth is 1.
    pub depth: usize,
}

/// Nodes are stored in breadth-first order with the root at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArgumentTree {
    nodes: Vec<TreeNode>,
}

impl ArgumentTree {
    pub fn root(&self) -> &ClassicalArgument {
        &self.nodes[0].argument
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn children(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&j| self.nodes[j].parent == Some(i))
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Direct undercuts of the root.
    pub fn root_undercuts(&self) -> usize {
        self.children(0).count()
    }

    fn path_support(&self, mut i: usize) -> KnowledgeBase {
        let mut acc = KnowledgeBase::new();
        loop {
            acc = acc.union(self.nodes[i].argument.support());
            match self.nodes[i].parent {
                Some(p) => i = p,
                None => return acc,
            }
        }
    }
}

/// Canonical undercuts of `a` drawn from `kb`: claim is the negated conjunction of its support.
pub fn canonical_undercuts(kb: &KnowledgeBase, a: &ClassicalArgument, cfg: &Config) -> Result<BTreeSet<ClassicalArgument>> {
    let claim = Formula::not(a.support().conjunction());
    enumerate_arguments_with(kb, Some(&claim), cfg)
}

pub fn build_argument_tree(kb: &KnowledgeBase, root_premise: &Formula) -> Result<ArgumentTree> {
    build_argument_tree_with(kb, root_premise, &Config::default())
}

pub fn build_argument_tree_with(kb: &KnowledgeBase, root_premise: &Formula, cfg: &Config) -> Result<ArgumentTree> {
    if !kb.contains(root_premise) {
        return Err(Error::InvalidRoot(format!("{root_premise} is not in the knowledgebase")));
    }
    let support: KnowledgeBase = [root_premise.clone()].into_iter().collect();
    let root = ClassicalArgument::new(support, root_premise.clone())
        .map_err(|e| Error::InvalidRoot(format!("{root_premise}: {e}")))?;
    let mut tree = ArgumentTree {
        nodes: vec![TreeNode { argument: root, parent: None, depth: 1 }],
    };
    let mut next = 0;
    while next < tree.nodes.len() {
        let seen = tree.path_support(next);
        let depth = tree.nodes[next].depth + 1;
        for child in canonical_undercuts(kb, &tree.nodes[next].argument, cfg)? {
            if !child.support().is_subset(&seen) {
                tree.nodes.push(TreeNode { argument: child, parent: Some(next), depth });
            }
        }
        next += 1;
    }
    Ok(tree)
}

/// Tree measure: root undercut count scaled by 1/height, 1/total depth, or total inverse depth.
pub fn i_arg(tree: &ArgumentTree, variant: u8) -> Result<MeasureValue> {
    let undercuts = MeasureValue::from_count(tree.root_undercuts());
    let factor = match variant {
        1 => MeasureValue::from_count(tree.height()).recip(),
        2 => MeasureValue::from_count(tree.nodes.iter().map(|n| n.depth).sum()).recip(),
        3 => Some(tree.nodes.iter().map(|n| MeasureValue::new(1, n.depth as i64)).sum()),
        other => return Err(Error::UnknownMeasure(format!("arg{other}"))),
    };
    factor.map(|f| undercuts * f).ok_or(Error::DegenerateTree(variant))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kb(xs: &[&str]) -> KnowledgeBase {
        KnowledgeBase::parse(xs.iter().copied()).unwrap()
    }

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn single_node_tree() {
        let t = build_argument_tree(&kb(&["a"]), &f("a")).unwrap();
        assert_eq!(t.len(), 1);
        for v in 1..=3 {
            assert!(i_arg(&t, v).unwrap().is_zero());
        }
    }

    #[test]
    fn contradiction_pair() {
        let t = build_argument_tree(&kb(&["a", "!a"]), &f("a")).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.nodes()[1].argument.support(), &kb(&["!a"]));
        assert_eq!(t.height(), 2);
        assert_eq!(i_arg(&t, 1).unwrap(), MeasureValue::new(1, 2));
        assert_eq!(i_arg(&t, 2).unwrap(), MeasureValue::new(1, 3));
        assert_eq!(i_arg(&t, 3).unwrap(), MeasureValue::new(3, 2));
    }

    #[test]
    fn invalid_roots() {
        assert!(matches!(build_argument_tree(&kb(&["a"]), &f("b")), Err(Error::InvalidRoot(_))));
        assert!(matches!(build_argument_tree(&kb(&["$false"]), &f("$false")), Err(Error::InvalidRoot(_))));
        let t = build_argument_tree(&kb(&["a"]), &f("a")).unwrap();
        assert!(matches!(i_arg(&t, 4), Err(Error::UnknownMeasure(_))));
    }
}
