use crate::scalar::Scalar;

/// A position together with its objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Incumbent<T> {
    pub position: Vec<T>,
    pub value: T,
}

impl<T: Scalar> Incumbent<T> {
    /// Replaces the incumbent if `value` is strictly better.
    pub fn offer(&mut self, position: &[T], value: T) -> bool {
        if value < self.value {
            self.position.clear();
            self.position.extend_from_slice(position);
            self.value = value;
            true
        } else {
            false
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Penguin<T> {
    pub position: Vec<T>,
    pub oxygen: T,
    /// Objective value at `position`.
    pub value: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group<T> {
    pub id: usize,
    pub center: Vec<T>,
    /// Half-width of the group's region box around `center`.
    pub radius: T,
    pub members: Vec<Penguin<T>>,
    pub local_best: Incumbent<T>,
    /// Quantity of eaten fish.
    pub qef: T,
}

impl<T: Scalar> Group<T> {
    pub fn region_lower(&self) -> Vec<T> {
        self.center.iter().map(|&c| c - self.radius).collect()
    }

    pub fn region_upper(&self) -> Vec<T> {
        self.center.iter().map(|&c| c + self.radius).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState<T> {
    pub groups: Vec<Group<T>>,
    pub global_best: Incumbent<T>,
    /// Completed cycles.
    pub cycle: u64,
    /// Membership probabilities used by the latest redistribution, indexed
    /// like `groups` was before empty groups were dropped.
    pub probabilities: Vec<T>,
    /// Center separation actually enforced when the regions were placed.
    pub separation: T,
}

impl<T: Scalar> SwarmState<T> {
    pub fn penguin_count(&self) -> usize {
        self.groups.iter().map(|g| g.members.len()).sum()
    }

    pub fn penguins(&self) -> impl Iterator<Item = &Penguin<T>> {
        self.groups.iter().flat_map(|g| g.members.iter())
    }

    /// Pulls the best local best into the global best.
    pub fn refresh_global_best(&mut self) {
        for g in &self.groups {
            self.global_best
                .offer(&g.local_best.position, g.local_best.value);
        }
    }
}
