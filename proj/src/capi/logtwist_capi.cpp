#include "logtwist/logtwist.h"

#include <cstring>
#include <new>
#include <string>

#include "logtwist/dot.hpp"
#include "logtwist/jobs.hpp"

struct lt_fixture {
  logtwist::Fixture fixture;
  logtwist::JobOptions overrides;
};

struct lt_monoid {
  logtwist::MinimalMonoid monoid;
};

namespace {

thread_local std::string last_error;

lt_status fail(lt_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
lt_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const logtwist::UnsupportedRegime& e) {
    return fail(LT_ERR_UNSUPPORTED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LT_ERR_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(LT_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

logtwist::JobOptions merge(const lt_fixture* f, const lt_options* o) {
  logtwist::JobOptions opts = f->overrides;
  const lt_options d = o ? *o : lt_default_options();
  opts.max_contact = d.max_contact;
  opts.seed = d.seed;
  opts.placements = d.placements;
  return opts;
}

template <typename Job>
lt_status run(const lt_fixture* f, const lt_options* o, char** out, Job job) {
  if (!f || !out) return fail(LT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(logtwist::dump(job(f->fixture, merge(f, o))));
    return LT_OK;
  });
}

}  // namespace

extern "C" {

lt_options lt_default_options(void) {
  const logtwist::JobOptions d;
  return lt_options{d.max_contact, d.seed, d.placements};
}

lt_status lt_fixture_parse(const char* json, lt_fixture** out) {
  if (!json || !out) return fail(LT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new lt_fixture{logtwist::parse_fixture(json), {}};
    return LT_OK;
  });
}

void lt_fixture_free(lt_fixture* f) { delete f; }

lt_status lt_fixture_set_signs(lt_fixture* f, const char* text) {
  if (!f || !text) return fail(LT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    f->overrides.signs = logtwist::parse_signs(text);
    return LT_OK;
  });
}

lt_status lt_fixture_set_involution_json(lt_fixture* f, const char* json) {
  if (!f || !json) return fail(LT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    logtwist::Json j;
    try {
      j = logtwist::Json::parse(json);
    } catch (const logtwist::Json::parse_error& e) {
      throw logtwist::InputError("", std::string("malformed JSON: ") + e.what());
    }
    f->overrides.involution = logtwist::involution_from_json(j, "", f->fixture.graph);
    return LT_OK;
  });
}

lt_status lt_run_enumerate(const lt_fixture* f, const lt_options* o, char** out) {
  return run(f, o, out, logtwist::run_enumerate);
}
lt_status lt_run_monoid(const lt_fixture* f, const lt_options* o, char** out) {
  return run(f, o, out, logtwist::run_monoid);
}
lt_status lt_run_spin(const lt_fixture* f, const lt_options* o, char** out) {
  return run(f, o, out, logtwist::run_spin);
}
lt_status lt_run_hyper(const lt_fixture* f, const lt_options* o, char** out) {
  return run(f, o, out, logtwist::run_hyper);
}
lt_status lt_run_report(const lt_fixture* f, const lt_options* o, char** out) {
  return run(f, o, out, logtwist::run_report);
}

lt_status lt_graph_dot(const lt_fixture* f, char** out) {
  if (!f || !out) return fail(LT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(logtwist::to_dot(f->fixture.graph, f->fixture.structure));
    return LT_OK;
  });
}

lt_status lt_minimal_monoid(const lt_fixture* f, lt_monoid** out) {
  if (!f || !out) return fail(LT_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new lt_monoid{logtwist::minimal_monoid(f->fixture.weighted())};
    return LT_OK;
  });
}

void lt_monoid_free(lt_monoid* m) { delete m; }

size_t lt_monoid_rank(const lt_monoid* m) { return m ? m->monoid.rank() : 0; }

int lt_monoid_is_sharp(const lt_monoid* m) { return m && m->monoid.monoid.sharp() ? 1 : 0; }

lt_status lt_monoid_image(const lt_monoid* m, const char* symbol, int64_t* coords, size_t len) {
  if (!m || !symbol || (!coords && len > 0)) return fail(LT_ERR_ARGUMENT, "null argument");
  if (len != m->monoid.rank()) return fail(LT_ERR_ARGUMENT, "buffer length does not match the rank");
  return guarded([&] {
    const auto& v = m->monoid.image(symbol);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].fits_slong_p()) return fail(LT_ERR_INVALID, "coordinate does not fit in 64 bits");
      coords[i] = v[i].get_si();
    }
    return LT_OK;
  });
}

const char* lt_last_error(void) { return last_error.c_str(); }

void lt_string_free(char* s) { delete[] s; }

}  // extern "C"
