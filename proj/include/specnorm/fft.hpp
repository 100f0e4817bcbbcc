#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace specnorm {

using cdouble = std::complex<double>;

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace detail {

/// In-place iterative radix-2 FFT.  Twiddles come from a table filled with
/// direct trig calls per entry, which keeps the relative error near machine
/// precision for the sizes used here (<= 2^22).
class Pow2Fft {
  public:
    explicit Pow2Fft(std::size_t n) : n_(n) {
        if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("Pow2Fft: size must be a power of two");
        twiddle_.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            twiddle_[k] = {std::cos(ang), std::sin(ang)};
        }
        bitrev_.resize(n);
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < n) ++log2n;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < log2n; ++b) r |= ((i >> b) & 1u) << (log2n - 1 - b);
            bitrev_[i] = r;
        }
    }

    std::size_t size() const { return n_; }

    /// y_k = sum_j x_j exp(-2 pi i jk/n)
    void forward(std::vector<cdouble>& a) const { run(a, false); }

    /// y_k = sum_j x_j exp(+2 pi i jk/n), no 1/n scaling
    void inverse_unscaled(std::vector<cdouble>& a) const { run(a, true); }

    void inverse(std::vector<cdouble>& a) const {
        run(a, true);
        const double s = 1.0 / static_cast<double>(n_);
        for (auto& v : a) v *= s;
    }

  private:
    void run(std::vector<cdouble>& a, bool inv) const {
        assert(a.size() == n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t j = bitrev_[i];
            if (i < j) std::swap(a[i], a[j]);
        }
        for (std::size_t len = 2; len <= n_; len <<= 1) {
            const std::size_t half = len / 2;
            const std::size_t step = n_ / len;
            for (std::size_t i = 0; i < n_; i += len) {
                for (std::size_t k = 0; k < half; ++k) {
                    cdouble w = twiddle_[k * step];
                    if (inv) w = std::conj(w);
                    const cdouble u = a[i + k];
                    const cdouble t = w * a[i + k + half];
                    a[i + k] = u + t;
                    a[i + k + half] = u - t;
                }
            }
        }
    }

    std::size_t n_;
    std::vector<cdouble> twiddle_;
    std::vector<std::size_t> bitrev_;
};

}  // namespace detail

/// DFT of arbitrary length: forward is y_k = sum_j x_j exp(-2 pi i jk/n).
/// Power-of-two sizes run the radix-2 kernel directly; everything else goes
/// through Bluestein's chirp transform on a padded power-of-two convolution.
/// Construction precomputes all tables; transforms are const and reentrant.
class Fft {
  public:
    explicit Fft(std::size_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("Fft: size must be >= 1");
        if ((n & (n - 1)) == 0) {
            pow2_ = std::make_unique<detail::Pow2Fft>(n);
            return;
        }
        conv_size_ = next_pow2(2 * n - 1);
        conv_ = std::make_unique<detail::Pow2Fft>(conv_size_);
        chirp_.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            // angle = -pi k^2 / n with k^2 reduced mod 2n, so the trig
            // argument stays small even when k^2 would lose integer precision
            const std::size_t k2 = (k * k) % (2 * n);
            const double ang = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
            chirp_[k] = {std::cos(ang), std::sin(ang)};
        }
        // b_m = conj(chirp_|m|) is even in m, so its DFT B satisfies
        // B_k = B_{-k}; the inverse path relies on that symmetry.
        bhat_.assign(conv_size_, cdouble{0.0, 0.0});
        bhat_[0] = std::conj(chirp_[0]);
        for (std::size_t k = 1; k < n_; ++k) {
            bhat_[k] = std::conj(chirp_[k]);
            bhat_[conv_size_ - k] = std::conj(chirp_[k]);
        }
        conv_->forward(bhat_);
    }

    std::size_t size() const { return n_; }

    void forward(std::vector<cdouble>& a) const { transform(a, false); }

    void inverse(std::vector<cdouble>& a) const {
        transform(a, true);
        const double s = 1.0 / static_cast<double>(n_);
        for (auto& v : a) v *= s;
    }

  private:
    void transform(std::vector<cdouble>& a, bool inv) const {
        if (a.size() != n_) throw std::invalid_argument("Fft: input length mismatch");
        if (n_ == 1) return;
        if (pow2_) {
            if (inv) {
                pow2_->inverse_unscaled(a);
            } else {
                pow2_->forward(a);
            }
            return;
        }
        std::vector<cdouble> u(conv_size_, cdouble{0.0, 0.0});
        for (std::size_t k = 0; k < n_; ++k) {
            const cdouble c = inv ? std::conj(chirp_[k]) : chirp_[k];
            u[k] = a[k] * c;
        }
        conv_->forward(u);
        if (inv) {
            // FFT(conj(b)) = conj(FFT(b)) because b is even
            for (std::size_t k = 0; k < conv_size_; ++k) u[k] *= std::conj(bhat_[k]);
        } else {
            for (std::size_t k = 0; k < conv_size_; ++k) u[k] *= bhat_[k];
        }
        conv_->inverse(u);
        for (std::size_t k = 0; k < n_; ++k) {
            const cdouble c = inv ? std::conj(chirp_[k]) : chirp_[k];
            a[k] = u[k] * c;
        }
    }

    std::size_t n_;
    std::unique_ptr<detail::Pow2Fft> pow2_;
    std::unique_ptr<detail::Pow2Fft> conv_;
    std::size_t conv_size_ = 0;
    std::vector<cdouble> chirp_;
    std::vector<cdouble> bhat_;
};

}  // namespace specnorm
