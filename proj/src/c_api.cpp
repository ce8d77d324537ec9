#include "adisc/adisc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "adisc/duhamel.hpp"
#include "adisc/error.hpp"
#include "adisc/harness.hpp"
#include "adisc/spaces.hpp"
#include "adisc/text_io.hpp"
#include "adisc/verify.hpp"

struct adisc_series {
  adisc::Series value;
};

namespace {

thread_local std::string g_last_error;

adisc_status record(adisc_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <class Body>
adisc_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return ADISC_OK;
  } catch (const adisc::Error& e) {
    return record(static_cast<adisc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(ADISC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(ADISC_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(ADISC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) adisc::fail(adisc::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

adisc::Format format_of(adisc_format f) {
  require(f == ADISC_FORMAT_MD || f == ADISC_FORMAT_JSON, "unknown format");
  return f == ADISC_FORMAT_JSON ? adisc::Format::Json : adisc::Format::Markdown;
}

adisc_series* wrap(adisc::Series s) { return new adisc_series{std::move(s)}; }

}  // namespace

extern "C" {

const char* adisc_version(void) { return "1.0.0"; }

const char* adisc_status_name(adisc_status status) {
  switch (status) {
    case ADISC_OK: return "ok";
    case ADISC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ADISC_ERR_PARSE: return "parse error";
    case ADISC_ERR_DOMAIN: return "domain error";
    case ADISC_ERR_NOT_SELF_MAP: return "not a self-map";
    case ADISC_ERR_QUADRATURE: return "quadrature failure";
    case ADISC_ERR_IO: return "i/o error";
    case ADISC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* adisc_last_error(void) { return g_last_error.c_str(); }

void adisc_string_free(char* s) { std::free(s); }

adisc_status adisc_series_parse(const char* text, int working_degree, adisc_series** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(adisc::parse_series(text, working_degree));
  });
}

adisc_status adisc_series_from_coeffs(const double* re, const double* im, size_t count, adisc_series** out) {
  return guarded([&] {
    require(re && out && count > 0, "null argument or empty coefficient array");
    std::vector<adisc::Complex> c(count);
    for (size_t k = 0; k < count; ++k) c[k] = {re[k], im ? im[k] : 0.0};
    *out = wrap(adisc::Series(std::move(c)));
  });
}

void adisc_series_free(adisc_series* f) { delete f; }

int adisc_series_degree(const adisc_series* f) { return f ? f->value.degree() : -1; }

adisc_status adisc_series_coeff(const adisc_series* f, int k, double* re, double* im) {
  return guarded([&] {
    require(f && re && im, "null argument");
    const adisc::Complex c = f->value[k];
    *re = c.real();
    *im = c.imag();
  });
}

adisc_status adisc_series_to_json(const adisc_series* f, int trim, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = copy_string(adisc::series_to_json(f->value, trim != 0));
  });
}

adisc_status adisc_mul(const adisc_series* f, const adisc_series* g, adisc_series** out) {
  return guarded([&] {
    require(f && g && out, "null argument");
    *out = wrap(adisc::cauchy_mul(f->value, g->value));
  });
}

adisc_status adisc_duhamel(const adisc_series* f, const adisc_series* g, adisc_series** out) {
  return guarded([&] {
    require(f && g && out, "null argument");
    *out = wrap(adisc::duhamel(f->value, g->value));
  });
}

adisc_status adisc_compose(const adisc_series* f, const adisc_series* phi, adisc_series** out, double* error_estimate,
                           int* path) {
  return guarded([&] {
    require(f && phi && out, "null argument");
    adisc::ComposeResult r = adisc::compose_detailed(f->value, phi->value);
    if (error_estimate) *error_estimate = r.error_estimate;
    if (path) *path = r.path == adisc::ComposePath::Triangular ? 0 : 1;
    *out = wrap(std::move(r.series));
  });
}

adisc_status adisc_evaluate(const adisc_series* f, double re, double im, double* out_re, double* out_im) {
  return guarded([&] {
    require(f && out_re && out_im, "null argument");
    const adisc::Complex v = adisc::evaluate(f->value, {re, im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

adisc_status adisc_norm(const adisc_series* f, const char* space, double* value, double* error_estimate,
                        const char** method) {
  return guarded([&] {
    require(f && space && value, "null argument");
    const adisc::NormResult r = adisc::norm(f->value, adisc::SpaceSpec::parse(space));
    *value = r.value;
    if (error_estimate) *error_estimate = r.error_estimate;
    if (method) *method = adisc::to_string(r.method).data();
  });
}

void adisc_mult_options_init(adisc_mult_options* options) {
  if (!options) return;
  const adisc::MultCheckOptions d;
  options->seed = d.seed;
  options->trials = d.trials;
  options->working_degree = d.working_degree;
  options->duhamel = d.duhamel ? 1 : 0;
  options->tol = d.tol;
  options->threads = d.threads;
}

adisc_status adisc_check_multiplicative(const char* op, const char* space, const adisc_mult_options* options,
                                        adisc_format format, int* pass, char** report) {
  return guarded([&] {
    require(op && space && pass && report, "null argument");
    adisc::MultCheckOptions o;
    if (options) {
      o.seed = options->seed;
      o.trials = options->trials;
      o.working_degree = options->working_degree;
      o.duhamel = options->duhamel != 0;
      o.tol = options->tol;
      o.threads = options->threads;
    }
    const adisc::MultCheckOutcome r = adisc::check_multiplicative(op, space, o, format_of(format));
    *report = copy_string(r.text);
    *pass = r.pass ? 1 : 0;
  });
}

void adisc_verify_options_init(adisc_verify_options* options) {
  if (!options) return;
  const adisc::VerifyOptions d;
  options->seed = d.seed;
  options->degree = d.degree;
  options->threads = d.threads;
  options->only = nullptr;
  options->timing = 1;
}

adisc_status adisc_verify(const adisc_verify_options* options, adisc_format format, int* all_pass, char** report) {
  return guarded([&] {
    require(all_pass && report, "null argument");
    adisc::VerifyOptions o;
    bool timing = true;
    if (options) {
      o.seed = options->seed;
      o.degree = options->degree;
      o.threads = options->threads;
      if (options->only) o.only = options->only;
      timing = options->timing != 0;
    }
    const adisc::VerificationReport rep = adisc::run_verification(o);
    *report = copy_string(adisc::render_report(rep, format_of(format), timing));
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
