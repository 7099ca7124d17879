//! Peak heap tracking for the benchmark harness.
//!
//! A binary opts in by installing [`PeakAllocator`] as its global allocator:
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: maxdisp::memory::PeakAllocator = maxdisp::memory::PeakAllocator::new();
//! ```

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering};

/// Source of peak-memory readings around a measured region.
pub trait MemoryProbe {
    /// Starts a new measurement window.
    fn reset_peak(&self);
    /// Peak bytes in use since the last reset, if the platform can tell.
    fn peak_bytes(&self) -> Option<u64>;
}

/// Probe for environments without a tracking allocator.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoProbe;

impl MemoryProbe for NoProbe {
    fn reset_peak(&self) {}

    fn peak_bytes(&self) -> Option<u64> {
        None
    }
}

/// System allocator wrapper counting live and peak heap bytes.
#[derive(Debug)]
pub struct PeakAllocator {
    live: AtomicUsize,
    peak: AtomicUsize,
}

impl PeakAllocator {
    pub const fn new() -> Self {
        Self {
            live: AtomicUsize::new(0),
            peak: AtomicUsize::new(0),
        }
    }

    pub fn live_bytes(&self) -> usize {
        self.live.load(Ordering::Relaxed)
    }

    fn grow(&self, bytes: usize) {
        let live = self.live.fetch_add(bytes, Ordering::Relaxed) + bytes;
        self.peak.fetch_max(live, Ordering::Relaxed);
    }

    fn shrink(&self, bytes: usize) {
        self.live.fetch_sub(bytes, Ordering::Relaxed);
    }
}

impl Default for PeakAllocator {
    fn default() -> Self {
        Self::new()
    }
}

unsafe impl GlobalAlloc for PeakAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let ptr = System.alloc(layout);
        if !ptr.is_null() {
            self.grow(layout.size());
        }
        ptr
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let ptr = System.alloc_zeroed(layout);
        if !ptr.is_null() {
            self.grow(layout.size());
        }
        ptr
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        self.shrink(layout.size());
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let new = System.realloc(ptr, layout, new_size);
        if !new.is_null() {
            if new_size >= layout.size() {
                self.grow(new_size - layout.size());
            } else {
                self.shrink(layout.size() - new_size);
            }
        }
        new
    }
}

impl MemoryProbe for PeakAllocator {
    fn reset_peak(&self) {
        self.peak
            .store(self.live.load(Ordering::Relaxed), Ordering::Relaxed);
    }

    fn peak_bytes(&self) -> Option<u64> {
        Some(self.peak.load(Ordering::Relaxed) as u64)
    }
}
