//! Frame layout for worker-to-worker messages.
//!
//! Every message is `(u32 source rank, u8 dimension, u8 side, u32 count,
//! count x f64)`, all little-endian. Halo messages use side 0 (low) or
//! 1 (high); gather payloads use side 2.

use crate::error::{Error, Result};
use std::io::{Read, Write};

pub const SIDE_GATHER: u8 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub source: u32,
    pub dim: u8,
    pub side: u8,
    pub values: Vec<f64>,
}

impl Frame {
    pub fn matches(&self, from: usize, dim: u8, side: u8) -> bool {
        self.source as usize == from && self.dim == dim && self.side == side
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(10 + 8 * self.values.len());
        buf.extend_from_slice(&self.source.to_le_bytes());
        buf.push(self.dim);
        buf.push(self.side);
        buf.extend_from_slice(&(self.values.len() as u32).to_le_bytes());
        for v in &self.values {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        buf
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        w.write_all(&self.encode())?;
        w.flush()?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Frame> {
        let mut head = [0u8; 10];
        r.read_exact(&mut head)?;
        let source = u32::from_le_bytes(head[0..4].try_into().unwrap());
        let dim = head[4];
        let side = head[5];
        let count = u32::from_le_bytes(head[6..10].try_into().unwrap()) as usize;
        let mut payload = vec![0u8; 8 * count];
        r.read_exact(&mut payload)?;
        let values = payload
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(Frame {
            source,
            dim,
            side,
            values,
        })
    }
}

/// Pulls frames from `next` until one matches `(from, dim, side)`, buffering
/// everything else. Shared by all transports so tag matching behaves
/// identically regardless of arrival order.
pub(crate) fn match_frame(
    pending: &mut Vec<Frame>,
    from: usize,
    dim: u8,
    side: u8,
    mut next: impl FnMut() -> Result<Frame>,
) -> Result<Frame> {
    if let Some(pos) = pending.iter().position(|f| f.matches(from, dim, side)) {
        return Ok(pending.remove(pos));
    }
    loop {
        let frame = next()?;
        if frame.matches(from, dim, side) {
            return Ok(frame);
        }
        pending.push(frame);
        if pending.len() > 1 << 20 {
            return Err(Error::Protocol("unbounded pending message queue".into()));
        }
    }
}
