//! Axis-aligned bounding boxes in pixel coordinates.

use serde::{Deserialize, Serialize};

/// A real-valued bounding box: `(x, y)` is the top-left corner, `w`/`h` the
/// extents. Boxes may extend beyond frame bounds; cropping pads.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BBox {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl BBox {
    pub fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        BBox { x, y, w, h }
    }

    /// Box from center coordinates and extents.
    pub fn from_center(cx: f64, cy: f64, w: f64, h: f64) -> Self {
        BBox::new(cx - w / 2.0, cy - h / 2.0, w, h)
    }

    pub fn center(&self) -> (f64, f64) {
        (self.x + self.w / 2.0, self.y + self.h / 2.0)
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    /// Geometric-mean side length, the scale used by the tracker's
    /// scale-jump rule.
    pub fn scale(&self) -> f64 {
        (self.w * self.h).sqrt()
    }

    pub fn is_valid(&self) -> bool {
        self.x.is_finite()
            && self.y.is_finite()
            && self.w.is_finite()
            && self.h.is_finite()
            && self.w > 0.0
            && self.h > 0.0
    }

    /// Grow the box by `pad` pixels on every side.
    pub fn inflate(&self, pad: f64) -> BBox {
        BBox::new(
            self.x - pad,
            self.y - pad,
            self.w + 2.0 * pad,
            self.h + 2.0 * pad,
        )
    }

    /// Clip to the frame `[0, w) x [0, h)`. The result may be empty
    /// (`w <= 0` or `h <= 0`) when the box lies outside the frame.
    pub fn clip_to_frame(&self, frame_w: f64, frame_h: f64) -> BBox {
        let x0 = self.x.max(0.0);
        let y0 = self.y.max(0.0);
        let x1 = (self.x + self.w).min(frame_w);
        let y1 = (self.y + self.h).min(frame_h);
        BBox::new(x0, y0, x1 - x0, y1 - y0)
    }

    /// Integer pixel ranges covered by the box under the pixel-center
    /// convention: pixel `(r, c)` belongs to the box iff its center
    /// `(c + 0.5, r + 0.5)` lies inside it. Returns `(rows, cols)` as
    /// half-open ranges clipped to the frame.
    pub fn pixel_ranges(
        &self,
        frame_w: usize,
        frame_h: usize,
    ) -> (std::ops::Range<usize>, std::ops::Range<usize>) {
        let c0 = (self.x - 0.5).ceil().max(0.0) as usize;
        let c1 = ((self.x + self.w - 0.5).floor() + 1.0).clamp(0.0, frame_w as f64) as usize;
        let r0 = (self.y - 0.5).ceil().max(0.0) as usize;
        let r1 = ((self.y + self.h - 0.5).floor() + 1.0).clamp(0.0, frame_h as f64) as usize;
        (r0..r1.max(r0), c0..c1.max(c0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_roundtrip() {
        let b = BBox::from_center(10.0, 20.0, 4.0, 6.0);
        assert_eq!(b.x, 8.0);
        assert_eq!(b.y, 17.0);
        assert_eq!(b.center(), (10.0, 20.0));
    }

    #[test]
    fn pixel_ranges_pixel_center_convention() {
        // (4,4,2,2) covers pixel centers 4.5 and 5.5 on both axes.
        let b = BBox::new(4.0, 4.0, 2.0, 2.0);
        let (rows, cols) = b.pixel_ranges(10, 10);
        assert_eq!(rows, 4..6);
        assert_eq!(cols, 4..6);
    }

    #[test]
    fn pixel_ranges_clip() {
        let b = BBox::new(-3.0, -3.0, 5.0, 5.0);
        let (rows, cols) = b.pixel_ranges(10, 10);
        assert_eq!(rows, 0..2);
        assert_eq!(cols, 0..2);
    }

    #[test]
    fn inflate_then_clip() {
        let b = BBox::new(4.0, 4.0, 2.0, 2.0).inflate(2.0);
        assert_eq!(b, BBox::new(2.0, 2.0, 6.0, 6.0));
        let clipped = b.clip_to_frame(7.0, 10.0);
        assert_eq!(clipped, BBox::new(2.0, 2.0, 5.0, 6.0));
    }
}
