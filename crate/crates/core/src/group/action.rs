use std::collections::{HashMap, VecDeque};

use super::{GroupDescriptor, GroupElement};
use crate::error::{check_budget, CoreError, Result};

/// A left action of a finite group on `{0, ..., points - 1}`, given by the
/// images of the descriptor's generators.
#[derive(Clone, Debug)]
pub struct ActionHom {
    group: GroupDescriptor,
    points: usize,
    images: Vec<Vec<u32>>,
}

impl ActionHom {
    /// Checks only that each image is a bijection; see [`ActionHom::verify`].
    pub fn new(group: GroupDescriptor, points: usize, images: Vec<Vec<u32>>) -> Result<Self> {
        group.validate()?;
        let ngens = group.generators().len();
        if images.len() != ngens {
            return Err(CoreError::InvalidInput(format!(
                "{} has {ngens} generators but {} images were given",
                group.name(),
                images.len()
            )));
        }
        for img in &images {
            let mut seen = vec![false; points];
            if img.len() != points
                || img
                    .iter()
                    .any(|&p| p as usize >= points || std::mem::replace(&mut seen[p as usize], true))
            {
                return Err(CoreError::InvalidInput("generator image is not a permutation of the points".into()));
            }
        }
        Ok(ActionHom { group, points, images })
    }

    pub fn trivial(group: GroupDescriptor, points: usize) -> Result<Self> {
        let ngens = group.generators().len();
        let id: Vec<u32> = (0..points as u32).collect();
        ActionHom::new(group, points, vec![id; ngens])
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn generator_images(&self) -> &[Vec<u32>] {
        &self.images
    }

    /// Image of every group element, keyed by element.  Fails if the
    /// generator images do not extend to a homomorphism.
    pub fn element_images(&self, budget: u128) -> Result<HashMap<GroupElement, Vec<u32>>> {
        self.group.validate()?;
        check_budget("action enumeration", self.group.order(), budget)?;
        let gens = self.group.generators();
        let id = self.group.identity();
        let mut map = HashMap::from([(id.clone(), (0..self.points as u32).collect::<Vec<u32>>())]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            let img_g = map[&g].clone();
            for (s, img_s) in gens.iter().zip(&self.images) {
                let h = self.group.mul_unchecked(&g, s);
                let img_h: Vec<u32> = img_s.iter().map(|&p| img_g[p as usize]).collect();
                match map.get(&h) {
                    Some(existing) if *existing != img_h => {
                        return Err(CoreError::RelationFailure(format!(
                            "action of {} is not a homomorphism at {h}",
                            self.group.name()
                        )))
                    }
                    Some(_) => {}
                    None => {
                        map.insert(h.clone(), img_h);
                        queue.push_back(h);
                    }
                }
            }
        }
        Ok(map)
    }

    /// Exhaustive homomorphism check over the Cayley graph.
    pub fn verify(&self, budget: u128) -> Result<()> {
        self.element_images(budget).map(|_| ())
    }

    /// Orbit of `point` under the generators, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.points];
        seen[point] = true;
        let mut out = vec![point];
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            for img in &self.images {
                let q = img[p] as usize;
                if !std::mem::replace(&mut seen[q], true) {
                    out.push(q);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// All orbits, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.points];
        let mut out = Vec::new();
        for p in 0..self.points {
            if !done[p] {
                let orbit = self.orbit(p);
                for &q in &orbit {
                    done[q] = true;
                }
                out.push(orbit);
            }
        }
        out
    }
}

/// Orbit (sorted) and stabilizer (sorted) of `point`, after verifying the
/// action.
pub fn orbit_stabilizer(action: &ActionHom, point: usize, budget: u128) -> Result<(Vec<usize>, Vec<GroupElement>)> {
    if point >= action.points {
        return Err(CoreError::InvalidInput(format!("point {point} outside 0..{}", action.points)));
    }
    let images = action.element_images(budget)?;
    let orbit = action.orbit(point);
    let mut stab: Vec<GroupElement> = images
        .into_iter()
        .filter(|(_, img)| img[point] as usize == point)
        .map(|(g, _)| g)
        .collect();
    stab.sort();
    debug_assert_eq!(orbit.len() as u128 * stab.len() as u128, action.group.order());
    Ok((orbit, stab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ENUMERATION_BUDGET;

    #[test]
    fn natural_action_of_s3() {
        let g = GroupDescriptor::Symmetric(3);
        let act = ActionHom::new(g, 3, vec![vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
        let (orbit, stab) = orbit_stabilizer(&act, 0, ENUMERATION_BUDGET).unwrap();
        assert_eq!(orbit, vec![0, 1, 2]);
        assert_eq!(stab.len(), 2);
    }

    #[test]
    fn rejects_non_homomorphism() {
        // s1 -> swap, s2 -> 3-cycle violates s2^2 = 1
        let act = ActionHom::new(GroupDescriptor::Symmetric(3), 3, vec![vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert!(matches!(act.verify(ENUMERATION_BUDGET), Err(CoreError::RelationFailure(_))));
    }

    #[test]
    fn trivial_action() {
        let act = ActionHom::trivial(GroupDescriptor::Dihedral(3), 2).unwrap();
        let (orbit, stab) = orbit_stabilizer(&act, 1, ENUMERATION_BUDGET).unwrap();
        assert_eq!(orbit, vec![1]);
        assert_eq!(stab.len(), 6);
    }
}
