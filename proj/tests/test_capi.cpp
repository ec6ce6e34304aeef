#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "pointmass.h"

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const char* name) : path(std::string("capi_") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("sequence lifecycle and errors") {
  pm_sequence* seq = nullptr;
  REQUIRE(pm_sequence_interleaved(-0.6, &seq) == PM_OK);
  double re = 1.0, im = 1.0;
  CHECK(pm_sequence_alpha(seq, 0, &re, &im) == PM_OK);
  CHECK(re == 0.0);
  CHECK(im == 0.0);
  CHECK(pm_sequence_alpha(seq, 20001, &re, &im) == PM_OK);
  CHECK(re == doctest::Approx(-0.61).epsilon(1e-12));
  pm_sequence_free(seq);

  seq = nullptr;
  CHECK(pm_sequence_interleaved(0.4, &seq) == PM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(pm_last_error()).find("tau_inf") != std::string::npos);
  CHECK(seq == nullptr);

  double bad_alpha[] = {1.5};
  CHECK(pm_sequence_from_list(bad_alpha, 1, &seq) == PM_ERR_INVALID_COEFFICIENT);
}

TEST_CASE("delta fast path and perturbation through the C surface") {
  pm_sequence* seq = nullptr;
  REQUIRE(pm_sequence_interleaved(-0.6, &seq) == PM_OK);
  double de = 0.0, dodd = 0.0;
  REQUIRE(pm_delta_at_one(seq, 0.3, 1000000, &de, &dodd) == PM_OK);
  CHECK(std::fabs(de - 0.6 - 1e-3) <= 1e-8);
  CHECK(std::fabs(dodd - 0.6 - 1e-3) <= 1e-8);
  pm_sequence_free(seq);

  double alpha[] = {0.0};
  REQUIRE(pm_sequence_from_list(alpha, 1, &seq) == PM_OK);
  double re[3], im[3];
  REQUIRE(pm_perturb(seq, 0.0, 0.5, 3, re, im) == PM_OK);
  CHECK(re[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(im[0] == 0.0);
  CHECK(pm_perturb(seq, 0.0, 2.0, 3, re, im) == PM_ERR_INVALID_ARGUMENT);
  pm_sequence_free(seq);
}

TEST_CASE("jacobi handles") {
  pm_sequence* seq = nullptr;
  REQUIRE(pm_sequence_interleaved_constant(-0.5, &seq) == PM_OK);
  pm_jacobi* jc = nullptr;
  REQUIRE(pm_jacobi_from_sequence(seq, 8, &jc) == PM_OK);
  CHECK(pm_jacobi_size(jc) == 8);
  double a = 0.0, b = 1.0;
  CHECK(pm_jacobi_get(jc, 1, &a, &b) == PM_OK);
  CHECK(a * a == doctest::Approx(1.0));  // 2(1 + tau)
  CHECK(b == 0.0);
  CHECK(pm_jacobi_get(jc, 0, &a, &b) == PM_ERR_INVALID_ARGUMENT);
  CHECK(pm_jacobi_get(jc, 9, &a, &b) == PM_ERR_INVALID_ARGUMENT);
  pm_jacobi_free(jc);
  pm_sequence_free(seq);
}

TEST_CASE("configured runs") {
  pm_config* cfg = nullptr;
  REQUIRE(pm_config_create(&cfg) == PM_OK);
  TempFile out("circle.csv");
  CHECK(pm_config_set(cfg, "mode", "circle") == PM_OK);
  CHECK(pm_config_set(cfg, "tau_inf", "-0.6") == PM_OK);
  CHECK(pm_config_set(cfg, "n_max", "1024") == PM_OK);
  CHECK(pm_config_set(cfg, "out", out.path.c_str()) == PM_OK);
  CHECK(pm_run(cfg) == PM_OK);
  std::ifstream f(out.path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "m,delta_even,delta_odd,alpha_even_pert,alpha_odd_pert");
  pm_config_free(cfg);

  REQUIRE(pm_config_create(&cfg) == PM_OK);
  CHECK(pm_config_set(cfg, "mode", "circle") == PM_OK);
  CHECK(pm_run(cfg) == PM_ERR_INVALID_ARGUMENT);  // no tau_inf/y/x0 given
  pm_config_free(cfg);
}

TEST_CASE("config files") {
  TempFile cfg_file("run.cfg");
  {
    std::ofstream f(cfg_file.path);
    f << "# comment line\n"
      << "mode = circle\n"
      << "tau_inf=-0.6\n"
      << "\n"
      << "n_max = 256   # trailing comment\n";
  }
  pm_config* cfg = nullptr;
  REQUIRE(pm_config_create(&cfg) == PM_OK);
  TempFile out("cfg_run.csv");
  CHECK(pm_config_load(cfg, cfg_file.path.c_str()) == PM_OK);
  CHECK(pm_config_set(cfg, "out", out.path.c_str()) == PM_OK);  // override wins
  CHECK(pm_run(cfg) == PM_OK);
  pm_config_free(cfg);

  REQUIRE(pm_config_create(&cfg) == PM_OK);
  CHECK(pm_config_load(cfg, "no_such_file.cfg") == PM_ERR_IO);
  pm_config_free(cfg);
}
