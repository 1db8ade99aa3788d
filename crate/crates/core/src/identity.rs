//! Pairs of independently computed polynomials that a theorem says are equal.

use crate::tpoly::TPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub label: String,
    pub lhs: TPoly,
    pub rhs: TPoly,
}

impl Identity {
    pub fn new(label: impl Into<String>, lhs: TPoly, rhs: TPoly) -> Self {
        Identity {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A batch of identities; it holds iff every member does.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub identities: Vec<Identity>,
}

impl CheckOutcome {
    pub fn new() -> Self {
        CheckOutcome::default()
    }

    pub fn single(label: impl Into<String>, lhs: TPoly, rhs: TPoly) -> Self {
        CheckOutcome {
            identities: vec![Identity::new(label, lhs, rhs)],
        }
    }

    pub fn push(&mut self, label: impl Into<String>, lhs: TPoly, rhs: TPoly) {
        self.identities.push(Identity::new(label, lhs, rhs));
    }

    pub fn extend(&mut self, other: CheckOutcome) {
        self.identities.extend(other.identities);
    }

    pub fn holds(&self) -> bool {
        self.identities.iter().all(Identity::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Identity> + '_ {
        self.identities.iter().filter(|i| !i.holds())
    }
}
