use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search exceeded its time cap")]
pub struct TimedOut;

/// Optional wall-clock cap for exact searches, polled every few thousand nodes.
#[derive(Debug, Clone, Copy, Default)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub const NONE: Deadline = Deadline { at: None };

    pub fn after(cap: Duration) -> Self {
        Self { at: Some(Instant::now() + cap) }
    }

    pub fn from_option(cap: Option<Duration>) -> Self {
        cap.map_or(Self::NONE, Self::after)
    }

    pub fn expired(&self) -> bool {
        self.at.is_some_and(|t| Instant::now() >= t)
    }
}

/// Node counter that consults the deadline once every 4096 ticks.
pub(crate) struct Ticker<'a> {
    deadline: &'a Deadline,
    count: u32,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(deadline: &'a Deadline) -> Self {
        Self { deadline, count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), TimedOut> {
        self.count = self.count.wrapping_add(1);
        if self.count & 0xfff == 0 && self.deadline.expired() {
            Err(TimedOut)
        } else {
            Ok(())
        }
    }
}
