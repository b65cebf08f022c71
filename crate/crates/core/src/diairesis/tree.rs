use std::sync::Arc;

use super::{Concept, DiairesisError, PhiNumber, PredicateTable};
use crate::truth::TruthValue4;

/// A node of a division tree. `children[0]` is the negative (bit `0`) side,
/// `children[1]` the positive (bit `1`) side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiaireticNode {
    concept: Concept,
    phi: PhiNumber,
    split: Option<usize>,
    children: Option<Box<[DiaireticNode; 2]>>,
}

impl DiaireticNode {
    fn leaf(concept: Concept, phi: PhiNumber) -> Self {
        DiaireticNode {
            concept,
            phi,
            split: None,
            children: None,
        }
    }

    fn split(table: &PredicateTable, concept: Concept, phi: PhiNumber, p: usize) -> Self {
        let (pos, neg) = table.divide_by_index(&concept, p);
        let children = [
            DiaireticNode::leaf(neg, phi.child(false)),
            DiaireticNode::leaf(pos, phi.child(true)),
        ];
        DiaireticNode {
            concept,
            phi,
            split: Some(p),
            children: Some(Box::new(children)),
        }
    }

    pub fn concept(&self) -> &Concept {
        &self.concept
    }

    pub fn phi(&self) -> &PhiNumber {
        &self.phi
    }

    /// Index of the dividing predicate; `None` at leaves.
    pub fn split_predicate(&self) -> Option<usize> {
        self.split
    }

    pub fn children(&self) -> Option<(&DiaireticNode, &DiaireticNode)> {
        self.children.as_deref().map(|[neg, pos]| (neg, pos))
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    /// A singleton, or a concept no predicate of `table` can split.
    pub fn is_stoicheion(&self, table: &PredicateTable) -> bool {
        table.is_indivisible(&self.concept)
    }

    fn for_each_preorder<'a>(&'a self, f: &mut impl FnMut(&'a DiaireticNode)) {
        f(self);
        if let Some([neg, pos]) = self.children.as_deref() {
            neg.for_each_preorder(f);
            pos.for_each_preorder(f);
        }
    }

    fn children_mut(&mut self) -> impl Iterator<Item = &mut DiaireticNode> {
        self.children
            .as_deref_mut()
            .into_iter()
            .flat_map(|c| c.iter_mut())
    }
}

/// Binary division tree over a shared [`PredicateTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiaireticTree {
    root: DiaireticNode,
    table: Arc<PredicateTable>,
    depth: usize,
}

impl DiaireticTree {
    /// Applies `order[i]` to every node at depth `i`. Divisions may leave a
    /// side empty; the tree is always complete with `2^order.len()` leaves.
    pub fn build<S: AsRef<str>>(
        table: Arc<PredicateTable>,
        concept: Concept,
        order: &[S],
    ) -> Result<DiaireticTree, DiairesisError> {
        table.check_concept(&concept)?;
        let mut indices = Vec::with_capacity(order.len());
        for name in order {
            let p = table.predicate_index(name.as_ref())?;
            if indices.contains(&p) {
                return Err(DiairesisError::DuplicatePredicate(
                    name.as_ref().to_string(),
                ));
            }
            indices.push(p);
        }

        let mut root = DiaireticNode::leaf(concept, PhiNumber::root());
        let mut frontier = vec![&mut root];
        for &p in &indices {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for node in frontier {
                let concept = std::mem::take(&mut node.concept);
                let phi = std::mem::replace(&mut node.phi, PhiNumber::root());
                *node = DiaireticNode::split(&table, concept, phi, p);
                next.extend(node.children_mut());
            }
            frontier = next;
        }

        Ok(DiaireticTree {
            root,
            table,
            depth: indices.len(),
        })
    }

    /// Greedy balanced division: each node is split by the unused predicate
    /// with the smallest balance score among those leaving both sides
    /// non-empty, ties going to the smaller name. A node stays a leaf when it
    /// is a stoicheion or sits at `max_depth`.
    pub fn build_balanced(
        table: Arc<PredicateTable>,
        concept: Concept,
        max_depth: usize,
    ) -> Result<DiaireticTree, DiairesisError> {
        table.check_concept(&concept)?;
        let mut used = vec![false; table.predicates().len()];
        let mut depth = 0;
        let root = grow_balanced(
            &table,
            concept,
            PhiNumber::root(),
            &mut used,
            max_depth,
            &mut depth,
        );
        Ok(DiaireticTree { root, table, depth })
    }

    pub fn root(&self) -> &DiaireticNode {
        &self.root
    }

    pub fn table(&self) -> &PredicateTable {
        &self.table
    }

    pub fn shared_table(&self) -> Arc<PredicateTable> {
        Arc::clone(&self.table)
    }

    /// Number of division generations along the longest branch.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Every node, in first-difference order of φ-numbers.
    pub fn nodes(&self) -> Vec<&DiaireticNode> {
        let mut out = Vec::new();
        self.root.for_each_preorder(&mut |n| out.push(n));
        out
    }

    /// Leaves, in first-difference order of φ-numbers.
    pub fn leaves(&self) -> Vec<&DiaireticNode> {
        let mut out = Vec::new();
        self.root.for_each_preorder(&mut |n| {
            if n.is_leaf() {
                out.push(n)
            }
        });
        out
    }

    pub fn split_name(&self, node: &DiaireticNode) -> Option<&str> {
        node.split.map(|p| self.table.predicates()[p].as_str())
    }

    /// Knowledge join of the branch determinations of all leaves.
    pub fn determination(&self) -> TruthValue4 {
        self.leaves()
            .iter()
            .map(|leaf| leaf.phi.branch_determination())
            .fold(TruthValue4::Neither, TruthValue4::knowledge_join)
    }

    /// Descends by the item's row: the 1-side when it satisfies the split
    /// predicate, else the 0-side.
    pub fn classify(&self, item: &str) -> Result<(&DiaireticNode, PhiNumber), DiairesisError> {
        let i = self.table.item_index(item)?;
        let mut node = &self.root;
        while let (Some(p), Some([neg, pos])) = (node.split, node.children.as_deref()) {
            node = if self.table.holds(i, p) { pos } else { neg };
        }
        Ok((node, node.phi.clone()))
    }
}

fn grow_balanced(
    table: &PredicateTable,
    concept: Concept,
    phi: PhiNumber,
    used: &mut [bool],
    max_depth: usize,
    deepest: &mut usize,
) -> DiaireticNode {
    let generation = phi.generation();
    *deepest = (*deepest).max(generation);
    if generation >= max_depth || table.is_indivisible(&concept) {
        return DiaireticNode::leaf(concept, phi);
    }
    let best = (0..used.len())
        .filter(|&p| !used[p] && table.discriminates(&concept, p))
        .min_by(|&a, &b| {
            let score = |p| {
                let pos = table.positive_count(&concept, p);
                pos.abs_diff(concept.len() - pos)
            };
            score(a)
                .cmp(&score(b))
                .then_with(|| table.predicates()[a].cmp(&table.predicates()[b]))
        });
    let Some(p) = best else {
        return DiaireticNode::leaf(concept, phi);
    };

    let (pos, neg) = table.divide_by_index(&concept, p);
    used[p] = true;
    let children = [
        grow_balanced(table, neg, phi.child(false), used, max_depth, deepest),
        grow_balanced(table, pos, phi.child(true), used, max_depth, deepest),
    ];
    used[p] = false;
    DiaireticNode {
        concept,
        phi,
        split: Some(p),
        children: Some(Box::new(children)),
    }
}
