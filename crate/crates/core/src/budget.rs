use core::time::Duration;

use crate::error::Error;

/// Limits for enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on visited candidates (search nodes or whole maps).
    pub max_candidates: u64,
    /// Wall-clock bound, only enforced when a [`Clock`] is attached.
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_CANDIDATES: u64 = 1_000_000;

    pub fn new(max_candidates: u64) -> Self {
        Budget {
            max_candidates: max_candidates.max(1),
            max_time: None,
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.max_time = Some(limit);
        self
    }

    pub fn meter(&self) -> Meter<'static> {
        Meter {
            budget: *self,
            spent: 0,
            clock: None,
        }
    }

    pub fn meter_with_clock<'a>(&self, clock: &'a dyn Clock) -> Meter<'a> {
        Meter {
            budget: *self,
            spent: 0,
            clock: Some(clock),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_CANDIDATES)
    }
}

/// Elapsed time source; the core has no clock of its own.
pub trait Clock {
    fn elapsed(&self) -> Duration;
}

/// Running count of candidates against a [`Budget`].
pub struct Meter<'a> {
    budget: Budget,
    spent: u64,
    clock: Option<&'a dyn Clock>,
}

impl Meter<'_> {
    pub fn unlimited() -> Meter<'static> {
        Budget::new(u64::MAX).meter()
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn tick(&mut self) -> Result<(), Error> {
        self.charge(1)
    }

    pub fn charge(&mut self, amount: u64) -> Result<(), Error> {
        self.spent = self.spent.saturating_add(amount);
        if self.spent > self.budget.max_candidates {
            return Err(Error::BudgetExceeded {
                spent: self.spent,
                limit: self.budget.max_candidates,
            });
        }
        // the clock is polled every 1024 candidates
        if self.spent.is_multiple_of(1024) {
            if let (Some(clock), Some(limit)) = (self.clock, self.budget.max_time) {
                if clock.elapsed() > limit {
                    return Err(Error::DeadlineExceeded);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceeding_the_cap_is_an_error() {
        let mut m = Budget::new(3).meter();
        assert!(m.tick().is_ok());
        assert!(m.charge(2).is_ok());
        assert_eq!(m.tick(), Err(Error::BudgetExceeded { spent: 4, limit: 3 }));
    }

    struct Frozen(Duration);
    impl Clock for Frozen {
        fn elapsed(&self) -> Duration {
            self.0
        }
    }

    #[test]
    fn deadline_checked_with_clock() {
        let clock = Frozen(Duration::from_secs(10));
        let budget = Budget::new(u64::MAX).with_time(Duration::from_secs(1));
        let mut m = budget.meter_with_clock(&clock);
        assert_eq!(m.charge(1024), Err(Error::DeadlineExceeded));
    }
}
