//! Complex baseband signals, segmentation, STFT spectrograms and
//! gray-image conversion.
//!
//! A continuous-wave Doppler radar return is a complex voltage sampled at
//! slow-time rate `fs` (12.8 kHz by default). The spectrogram is the
//! magnitude-squared short-time Fourier transform over a sliding
//! rectangular window, zero-padded to `K` bins.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Complex baseband radar return at slow-time sampling rate.
#[derive(Debug, Clone, PartialEq)]
pub struct IqSignal {
    pub samples: Vec<Complex64>,
    pub sample_rate_hz: f64,
}

impl IqSignal {
    pub fn new(samples: Vec<Complex64>, sample_rate_hz: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidParameter("signal has no samples".into()));
        }
        if !(sample_rate_hz > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "sample rate must be positive, got {sample_rate_hz}"
            )));
        }
        Ok(Self {
            samples,
            sample_rate_hz,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz
    }

    /// Total energy sum |s(n)|^2.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum()
    }
}

/// Analysis window shape. Only the rectangular window is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WindowKind {
    #[default]
    Rectangular,
}

/// STFT parameters: window length `L`, DFT length `K` (zero padded) and
/// hop between consecutive frames.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StftConfig {
    pub window_len: usize,
    pub dft_len: usize,
    pub hop: usize,
    pub window_kind: WindowKind,
}

impl Default for StftConfig {
    fn default() -> Self {
        Self {
            window_len: 2048,
            dft_len: 4096,
            hop: 64,
            window_kind: WindowKind::Rectangular,
        }
    }
}

impl StftConfig {
    pub fn new(window_len: usize, dft_len: usize, hop: usize) -> Result<Self> {
        let cfg = Self {
            window_len,
            dft_len,
            hop,
            window_kind: WindowKind::Rectangular,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window_len == 0 {
            return Err(Error::BadConfig("window length must be positive".into()));
        }
        if self.dft_len < self.window_len {
            return Err(Error::BadConfig(format!(
                "dft length {} must be >= window length {}",
                self.dft_len, self.window_len
            )));
        }
        // The positive/negative band split and centering both assume an
        // even bin count.
        if self.dft_len % 2 != 0 {
            return Err(Error::BadConfig(format!(
                "dft length {} must be even",
                self.dft_len
            )));
        }
        if self.hop == 0 || self.hop > self.window_len {
            return Err(Error::BadConfig(format!(
                "hop {} must be in 1..={}",
                self.hop, self.window_len
            )));
        }
        Ok(())
    }
}

/// Frequency-axis ordering of a spectrogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Bins `0..K/2-1` hold nonnegative frequencies, `K/2..K-1` negative.
    Natural,
    /// Zero frequency at column `K/2`, frequencies ascending from `-fs/2`.
    Centered,
}

/// Time x Doppler-frequency power map. `power` is row-major with
/// `n_frames` rows and `n_bins` columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrogram {
    pub power: Vec<f64>,
    pub n_frames: usize,
    pub n_bins: usize,
    pub frame_times_s: Vec<f64>,
    pub freqs_hz: Vec<f64>,
    pub sample_rate_hz: f64,
    pub layout: Layout,
}

impl Spectrogram {
    #[inline]
    pub fn at(&self, frame: usize, bin: usize) -> f64 {
        self.power[frame * self.n_bins + bin]
    }

    #[inline]
    pub fn row(&self, frame: usize) -> &[f64] {
        &self.power[frame * self.n_bins..(frame + 1) * self.n_bins]
    }

    pub fn total_power(&self) -> f64 {
        self.power.iter().sum()
    }

    /// Frequency resolution in Hz (bin spacing).
    pub fn bin_hz(&self) -> f64 {
        self.sample_rate_hz / self.n_bins as f64
    }

    /// Multiply every power value by `c`. Used by scale-covariance checks.
    pub fn scaled(&self, c: f64) -> Spectrogram {
        let mut out = self.clone();
        for p in &mut out.power {
            *p *= c;
        }
        out
    }
}

/// 100x100 gray-scale image with pixels in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    pixels: Vec<f64>,
}

pub const GRAY_SIDE: usize = 100;

impl GrayImage {
    /// Builds an image from row-major pixel values; all must be in [0, 1].
    pub fn from_pixels(pixels: Vec<f64>) -> Result<Self> {
        if pixels.len() != GRAY_SIDE * GRAY_SIDE {
            return Err(Error::InvalidParameter(format!(
                "gray image needs {} pixels, got {}",
                GRAY_SIDE * GRAY_SIDE,
                pixels.len()
            )));
        }
        if pixels.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidParameter(
                "gray image pixels must lie in [0,1]".into(),
            ));
        }
        Ok(Self { pixels })
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * GRAY_SIDE + col]
    }

    /// Row-major vectorization, length 10000.
    pub fn as_vector(&self) -> &[f64] {
        &self.pixels
    }

    pub fn into_vector(self) -> Vec<f64> {
        self.pixels
    }
}

/// Magnitude-squared zero-padded STFT with a rectangular window.
///
/// Frame `n` covers samples `n*hop .. n*hop+L`; its power spectrum is
/// `|sum_m s(n*hop+m) exp(-j 2 pi m k / K)|^2` for `k = 0..K-1`. Frame
/// times are window centers. Output layout is `Natural`.
pub fn stft(signal: &IqSignal, cfg: &StftConfig) -> Result<Spectrogram> {
    cfg.validate()?;
    let n = signal.len();
    let l = cfg.window_len;
    let k = cfg.dft_len;
    if n < l {
        return Err(Error::SignalTooShort { len: n, need: l });
    }
    let n_frames = (n - l) / cfg.hop + 1;
    let fs = signal.sample_rate_hz;

    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(k);
    let mut buf = vec![Complex64::new(0.0, 0.0); k];
    let mut power = vec![0.0; n_frames * k];

    for frame in 0..n_frames {
        let start = frame * cfg.hop;
        buf[..l].copy_from_slice(&signal.samples[start..start + l]);
        for b in buf[l..].iter_mut() {
            *b = Complex64::new(0.0, 0.0);
        }
        fft.process(&mut buf);
        let row = &mut power[frame * k..(frame + 1) * k];
        for (dst, src) in row.iter_mut().zip(buf.iter()) {
            *dst = src.norm_sqr();
        }
    }

    let frame_times_s = (0..n_frames)
        .map(|frame| (frame * cfg.hop) as f64 / fs + (l as f64 - 1.0) / (2.0 * fs))
        .collect();
    let freqs_hz = (0..k)
        .map(|bin| {
            if bin < k / 2 {
                bin as f64 * fs / k as f64
            } else {
                (bin as f64 - k as f64) * fs / k as f64
            }
        })
        .collect();

    Ok(Spectrogram {
        power,
        n_frames,
        n_bins: k,
        frame_times_s,
        freqs_hz,
        sample_rate_hz: fs,
        layout: Layout::Natural,
    })
}

/// Rotates the frequency axis so zero frequency sits at column `K/2`.
///
/// Natural column `k` maps to centered column `(k + K/2) mod K`; the power
/// values are a pure permutation of the input.
pub fn center_spectrum(spec: &Spectrogram) -> Result<Spectrogram> {
    if spec.layout == Layout::Centered {
        return Err(Error::AlreadyCentered);
    }
    let k = spec.n_bins;
    let half = k / 2;
    let mut power = vec![0.0; spec.power.len()];
    for frame in 0..spec.n_frames {
        let src = spec.row(frame);
        let dst = &mut power[frame * k..(frame + 1) * k];
        for (col, &v) in src.iter().enumerate() {
            dst[(col + half) % k] = v;
        }
    }
    let fs = spec.sample_rate_hz;
    let freqs_hz = (0..k)
        .map(|bin| (bin as f64 - half as f64) * fs / k as f64)
        .collect();
    Ok(Spectrogram {
        power,
        n_frames: spec.n_frames,
        n_bins: k,
        frame_times_s: spec.frame_times_s.clone(),
        freqs_hz,
        sample_rate_hz: fs,
        layout: Layout::Centered,
    })
}

/// Fraction of the strongest window's energy below which further windows
/// are considered empty and segmentation stops.
const SEGMENT_ENERGY_FLOOR: f64 = 0.01;

/// Cuts fixed-length gesture segments out of a longer recording.
///
/// Candidate starts slide with stride `fs/10`; windows are ranked by
/// in-window energy and picked greedily without overlap. Selection stops
/// once the best remaining window falls below 1% of the strongest pick,
/// or after `floor(duration / window_s)` segments. Segments are returned
/// in chronological order.
pub fn segment_gesture(recording: &IqSignal, window_s: f64) -> Result<Vec<IqSignal>> {
    if !(window_s > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "window must be positive, got {window_s}"
        )));
    }
    let fs = recording.sample_rate_hz;
    let seg_len = (window_s * fs).round() as usize;
    let n = recording.len();
    if seg_len == 0 || n < seg_len {
        return Err(Error::RecordingTooShort {
            len: n,
            need: seg_len,
        });
    }
    let stride = ((fs / 10.0).round() as usize).max(1);
    let max_segments = (recording.duration_s() / window_s).floor() as usize;

    // Prefix sums of |s|^2 for O(1) window energies.
    let mut prefix = vec![0.0; n + 1];
    for (i, s) in recording.samples.iter().enumerate() {
        prefix[i + 1] = prefix[i] + s.norm_sqr();
    }
    let window_energy = |start: usize| prefix[start + seg_len] - prefix[start];

    let mut candidates: Vec<usize> = (0..=n - seg_len).step_by(stride).collect();
    let mut picks: Vec<usize> = Vec::new();
    let mut best_first = 0.0;
    while picks.len() < max_segments && !candidates.is_empty() {
        let (&start, energy) = candidates
            .iter()
            .map(|&c| (c, window_energy(c)))
            .fold(None::<(&usize, f64)>, |acc, (c, e)| match acc {
                Some((bs, be)) if be >= e => Some((bs, be)),
                _ => Some((&0, e)).map(|_| (c, e)).map(|(c, e)| (c, e)),
            })
            .map(|(c, e)| (c, e))
            .map_or((&0usize, f64::NEG_INFINITY), |(c, e)| (c, e))
            .clone()
            .into();
        // placeholder, replaced below
        let _ = (start, energy);
        unreachable!()
    }
    let _ = (window_energy, best_first, &mut picks);
    unreachable!()
}
