//! Coset decomposition for a verified normal subgroup.

use super::{ConjugacyData, FiniteGroup, GroupError};

#[derive(Debug, Clone)]
pub struct CosetPartition {
    /// cosets of N, the subgroup itself first; members ascending
    pub cosets: Vec<Vec<u32>>,
    /// conjugacy classes fully contained in each coset; a class straddling
    /// cosets (possible only when N does not contain G') is listed nowhere
    pub classes_in_coset: Vec<Vec<usize>>,
}

impl CosetPartition {
    pub fn compute(
        g: &FiniteGroup,
        classes: &ConjugacyData,
        members: &[bool],
    ) -> Result<CosetPartition, GroupError> {
        let v = g.order();
        assert_eq!(members.len(), v);
        if !members[0] {
            return Err(GroupError::NotSubgroup { a: 0, b: 0 });
        }
        let subgroup: Vec<usize> = (0..v).filter(|&x| members[x]).collect();
        for &a in &subgroup {
            for &b in &subgroup {
                if !members[g.mul(a, b)] {
                    return Err(GroupError::NotSubgroup { a, b });
                }
            }
        }
        for &x in &subgroup {
            for t in 0..v {
                if !members[g.conjugate(x, t)] {
                    return Err(GroupError::NotNormal { n: x, g: t });
                }
            }
        }
        let mut coset_of = vec![usize::MAX; v];
        let mut cosets: Vec<Vec<u32>> = Vec::new();
        for x in 0..v {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let mut coset: Vec<u32> = subgroup.iter().map(|&n| g.mul(n, x) as u32).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y as usize] = id;
            }
            cosets.push(coset);
        }
        let classes_in_coset = (0..cosets.len())
            .map(|c| {
                (0..classes.num_classes)
                    .filter(|&j| {
                        classes.members[j]
                            .iter()
                            .all(|&x| coset_of[x as usize] == c)
                    })
                    .collect()
            })
            .collect();
        Ok(CosetPartition { cosets, classes_in_coset })
    }
}
