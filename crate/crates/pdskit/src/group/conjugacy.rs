//! Conjugacy class data: classes, centralizer orders, inverse pairing and
//! the power map used by the character lifting.

use super::FiniteGroup;

/// Classes are sorted by (size, representative order, smallest member), so
/// the identity class is always index 0.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    pub num_classes: usize,
    /// element -> class index
    pub class_of: Vec<u32>,
    /// smallest member of each class
    pub reps: Vec<u32>,
    pub sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
    /// class index of the inverses of a class
    pub inverse_class: Vec<u32>,
    pub rep_orders: Vec<usize>,
    /// power_class[j][s] = class of reps[j]^s for s < rep_orders[j]
    pub power_class: Vec<Vec<u32>>,
    /// members of each class in ascending element order
    pub members: Vec<Vec<u32>>,
}

impl ConjugacyData {
    pub fn compute(g: &FiniteGroup) -> ConjugacyData {
        let v = g.order();
        let mut class_of = vec![u32::MAX; v];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for x in 0..v {
            if class_of[x] != u32::MAX {
                continue;
            }
            let idx = classes.len() as u32;
            let mut members = Vec::new();
            // orbit of x under conjugation
            let mut seen = vec![false; v];
            let mut stack = vec![x];
            seen[x] = true;
            while let Some(y) = stack.pop() {
                class_of[y] = idx;
                members.push(y as u32);
                for t in 0..v {
                    let z = g.conjugate(y, t);
                    if !seen[z] {
                        seen[z] = true;
                        stack.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        // canonical order: (size, rep order, min member)
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| {
            let min = classes[c][0] as usize;
            (classes[c].len(), g.order_of(min), min)
        });
        let classes: Vec<Vec<u32>> = order.into_iter().map(|c| std::mem::take(&mut classes[c])).collect();
        for (j, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x as usize] = j as u32;
            }
        }
        let r = classes.len();
        let reps: Vec<u32> = classes.iter().map(|m| m[0]).collect();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let centralizer_orders: Vec<usize> = sizes.iter().map(|s| v / s).collect();
        let inverse_class: Vec<u32> = reps
            .iter()
            .map(|&rep| class_of[g.inv(rep as usize)])
            .collect();
        let rep_orders: Vec<usize> = reps.iter().map(|&rep| g.order_of(rep as usize)).collect();
        let power_class: Vec<Vec<u32>> = (0..r)
            .map(|j| {
                let rep = reps[j] as usize;
                let mut out = Vec::with_capacity(rep_orders[j]);
                let mut x = 0usize;
                for _ in 0..rep_orders[j] {
                    out.push(class_of[x]);
                    x = g.mul(x, rep);
                }
                out
            })
            .collect();
        ConjugacyData {
            num_classes: r,
            class_of,
            reps,
            sizes,
            centralizer_orders,
            inverse_class,
            rep_orders,
            power_class,
            members: classes,
        }
    }

    /// True when the class equals its own inverse class.
    pub fn is_real(&self, j: usize) -> bool {
        self.inverse_class[j] as usize == j
    }
}
