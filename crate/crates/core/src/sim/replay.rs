//! Sliding-window replay protection with a strict-monotonic fast path.
//!
//! A 64-bit bitmap tracks the most recent window of sequence numbers;
//! anything older than the window is rejected outright.

/// Window size in sequence numbers.
pub const REPLAY_WINDOW: u64 = 64;

#[derive(Debug, Clone, Default)]
pub struct ReplayWindow {
    highest: u64,
    /// Bit `i` set means `highest - i` was accepted.
    bitmap: u64,
}

impl ReplayWindow {
    pub fn new() -> Self {
        Self::default()
    }

    /// Would `seq` be accepted? Does not mark it seen — call
    /// [`ReplayWindow::mark_seen`] only after the frame authenticates, so
    /// forged frames cannot poison the window.
    pub fn is_fresh(&self, seq: u64) -> bool {
        if seq > self.highest {
            return true;
        }
        let offset = self.highest - seq;
        if offset >= REPLAY_WINDOW {
            return false;
        }
        self.bitmap & (1 << offset) == 0
    }

    pub fn mark_seen(&mut self, seq: u64) {
        if seq > self.highest {
            let shift = seq - self.highest;
            self.bitmap = if shift >= 64 { 0 } else { self.bitmap << shift };
            self.bitmap |= 1;
            self.highest = seq;
        } else {
            let offset = self.highest - seq;
            debug_assert!(offset < REPLAY_WINDOW, "mark_seen on an expired seq");
            self.bitmap |= 1 << offset;
        }
    }
}
