use std::sync::Arc;

use super::{Elem, FiniteGroup, GroupError, Permutation};

/// A finite set with a left action of a [`FiniteGroup`].
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    points: usize,
    // action[g * points + x] = g . x
    action: Vec<usize>,
}

impl GSet {
    /// Builds a G-set from an explicit table and checks the action axioms.
    pub fn new(group: Arc<FiniteGroup>, points: usize, action: Vec<usize>) -> Result<Self, GroupError> {
        if action.len() != group.order() * points || action.iter().any(|&y| y >= points) {
            return Err(GroupError::InvalidAction("table has wrong shape".into()));
        }
        let set = GSet { group, points, action };
        set.check_axioms()?;
        Ok(set)
    }

    /// The action of a permutation group on the points it moves.
    pub fn natural(group: Arc<FiniteGroup>) -> Self {
        let points = group.degree();
        let mut action = Vec::with_capacity(group.order() * points);
        for g in group.elements() {
            action.extend_from_slice(group.label(g).images());
        }
        GSet { group, points, action }
    }

    /// Left multiplication of the group on its own elements.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let points = group.order();
        let mut action = Vec::with_capacity(points * points);
        for g in group.elements() {
            action.extend(group.elements().map(|x| group.mul(g, x)));
        }
        GSet { group, points, action }
    }

    /// Disjoint union over the same group; points of `other` are shifted.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet, GroupError> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(GroupError::InvalidAction("disjoint union needs a shared group".into()));
        }
        let points = self.points + other.points;
        let mut action = Vec::with_capacity(self.group.order() * points);
        for g in self.group.elements() {
            action.extend((0..self.points).map(|x| self.act(g, x)));
            action.extend((0..other.points).map(|x| other.act(g, x) + self.points));
        }
        Ok(GSet { group: self.group.clone(), points, action })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn act(&self, g: Elem, x: usize) -> usize {
        self.action[g * self.points + x]
    }

    pub fn fixed_points(&self, g: Elem) -> Vec<usize> {
        (0..self.points).filter(|&x| self.act(g, x) == x).collect()
    }

    /// The permutation of the points induced by `g`.
    pub fn permutation_of(&self, g: Elem) -> Permutation {
        Permutation::from_images(self.action[g * self.points..(g + 1) * self.points].to_vec())
            .expect("group elements act bijectively")
    }

    fn check_axioms(&self) -> Result<(), GroupError> {
        let grp = &self.group;
        for x in 0..self.points {
            if self.act(grp.identity(), x) != x {
                return Err(GroupError::InvalidAction(format!("identity moves point {x}")));
            }
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let gh = grp.mul(g, h);
                for x in 0..self.points {
                    if self.act(g, self.act(h, x)) != self.act(gh, x) {
                        return Err(GroupError::InvalidAction(format!(
                            "g(h x) != (gh) x for g={g}, h={h}, x={x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::symmetric_group;

    #[test]
    fn natural_and_regular_satisfy_axioms() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let nat = GSet::natural(s3.clone());
        assert!(nat.check_axioms().is_ok());
        let reg = GSet::regular(s3.clone());
        assert_eq!(reg.points(), 6);
        assert!(reg.check_axioms().is_ok());
        assert!(reg.fixed_points(1).is_empty());
    }

    #[test]
    fn rejects_bad_table() {
        let z2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        // generator acts trivially but identity swaps: not an action
        let err = GSet::new(z2, 2, vec![1, 0, 0, 1]).unwrap_err();
        assert!(matches!(err, GroupError::InvalidAction(_)));
    }

    #[test]
    fn disjoint_union_counts_fixed_points() {
        let s3 = Arc::new(symmetric_group(3).unwrap());
        let nat = GSet::natural(s3.clone());
        let both = nat.disjoint_union(&nat).unwrap();
        assert_eq!(both.points(), 6);
        let t = s3.index_of(&Permutation::transposition(3, 0, 1)).unwrap();
        assert_eq!(both.fixed_points(t), vec![2, 5]);
    }
}
