use super::{is_alternating, Orientation, PermError, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub label: usize,
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub parent: Option<usize>,
}

/// Planar binary tree with distinct labels, stored as an arena.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecreasingTree {
    nodes: Vec<TreeNode>,
    root: Option<usize>,
}

impl DecreasingTree {
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<&TreeNode> {
        self.root.map(|r| &self.nodes[r])
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn node_of_label(&self, label: usize) -> Option<&TreeNode> {
        self.nodes.iter().find(|n| n.label == label)
    }

    fn build(&mut self, word: &[usize], parent: Option<usize>) -> Option<usize> {
        let (pos, &max) = word.iter().enumerate().max_by_key(|(_, &x)| x)?;
        let id = self.nodes.len();
        self.nodes.push(TreeNode { label: max, left: None, right: None, parent });
        let left = self.build(&word[..pos], Some(id));
        let right = self.build(&word[pos + 1..], Some(id));
        self.nodes[id].left = left;
        self.nodes[id].right = right;
        Some(id)
    }

    /// Labels read in symmetric (left, root, right) order.
    pub fn in_order(&self) -> Vec<usize> {
        fn walk(t: &DecreasingTree, at: Option<usize>, out: &mut Vec<usize>) {
            if let Some(i) = at {
                walk(t, t.nodes[i].left, out);
                out.push(t.nodes[i].label);
                walk(t, t.nodes[i].right, out);
            }
        }
        let mut out = Vec::with_capacity(self.len());
        walk(self, self.root, &mut out);
        out
    }

    pub fn is_decreasing(&self) -> bool {
        self.nodes.iter().all(|n| [n.left, n.right].into_iter().flatten().all(|c| self.nodes[c].label < n.label))
    }

    /// Every internal node has two children, except that for an even number
    /// of nodes the rightmost branch ends in a node with only a left child.
    pub fn is_left_complete(&self) -> bool {
        let mut rightmost = Vec::new();
        let mut at = self.root;
        while let Some(i) = at {
            rightmost.push(i);
            at = self.nodes[i].right;
        }
        let bottom = rightmost.last().copied();
        self.nodes.iter().enumerate().all(|(i, n)| match (n.left, n.right) {
            (None, None) | (Some(_), Some(_)) => true,
            (Some(_), None) => self.len().is_multiple_of(2) && Some(i) == bottom,
            (None, Some(_)) => false,
        })
    }
}

/// The decreasing tree of an up-down permutation: the maximum is the root,
/// the prefix before it forms the left subtree and the suffix the right.
pub fn perm_to_tree(u: &Permutation) -> Result<DecreasingTree, PermError> {
    if !is_alternating(u, Orientation::UpDown) {
        return Err(PermError::NotAlternating(u.to_string()));
    }
    let mut tree = DecreasingTree { nodes: Vec::with_capacity(u.len()), root: None };
    tree.root = tree.build(u.word(), None);
    Ok(tree)
}

/// Number of labels `i` that lie to the right of `i + 1` in the tree and
/// are not a leaf hanging directly below `i + 1`.
pub fn tree_big_return_count(tree: &DecreasingTree) -> usize {
    let order = tree.in_order();
    let n = order.len();
    let mut pos = vec![0; n + 2];
    for (k, &x) in order.iter().enumerate() {
        pos[x] = k;
    }
    (1..n)
        .filter(|&i| {
            if pos[i] < pos[i + 1] {
                return false;
            }
            let node = tree.node_of_label(i).expect("label present");
            let is_leaf = node.left.is_none() && node.right.is_none();
            let under_next = node.parent.is_some_and(|p| tree.nodes[p].label == i + 1);
            !(is_leaf && under_next)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::alternating_perms;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let u = perm("794513286");
        let t = perm_to_tree(&u).unwrap();
        assert_eq!(t.root().unwrap().label, 9);
        assert_eq!(t.in_order(), u.word());
        assert_eq!(tree_big_return_count(&t), 3);
        assert_eq!(u.return_set_r(1).into_iter().collect::<Vec<_>>(), [3, 6, 8]);
        // shape: 9 has children 7 and 8, 8 has left child 5 and right child 6
        let root = t.root().unwrap();
        let label = |i: Option<usize>| i.map(|i| t.nodes()[i].label);
        assert_eq!((label(root.left), label(root.right)), (Some(7), Some(8)));
        let eight = &t.nodes()[root.right.unwrap()];
        assert_eq!((label(eight.left), label(eight.right)), (Some(5), Some(6)));
    }

    #[test]
    fn singleton_and_errors() {
        let t = perm_to_tree(&perm("1")).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(tree_big_return_count(&t), 0);
        assert!(matches!(perm_to_tree(&perm("321")), Err(PermError::NotAlternating(_))));
    }

    #[test]
    fn statistic_matches_big_returns() {
        for n in 1..=9 {
            let mut seen = std::collections::HashSet::new();
            for u in alternating_perms(n, Orientation::UpDown) {
                let t = perm_to_tree(&u).unwrap();
                assert!(t.is_decreasing() && t.is_left_complete(), "{u}");
                assert_eq!(t.in_order(), u.word());
                assert_eq!(tree_big_return_count(&t), u.ret_r(1), "{u}");
                assert!(seen.insert(format!("{:?}", t.nodes())));
            }
        }
    }

    #[test]
    fn histogram_n5() {
        let mut hist = [0usize; 4];
        for u in alternating_perms(5, Orientation::UpDown) {
            hist[tree_big_return_count(&perm_to_tree(&u).unwrap())] += 1;
        }
        assert_eq!(hist, [1, 7, 7, 1]);
    }
}
