#pragma once

#include <mpfr.h>

#include <utility>

namespace mlf::detail {

// Owning handle for an mpfr_t.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  MpFloat(mpfr_prec_t bits, double value) : MpFloat(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }
  MpFloat(const MpFloat& other) : MpFloat(mpfr_get_prec(other.v_)) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  MpFloat(MpFloat&& other) noexcept : MpFloat(MPFR_PREC_MIN) { mpfr_swap(v_, other.v_); }
  MpFloat& operator=(MpFloat other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~MpFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

}  // namespace mlf::detail
