// Times the parallel nat_set kernel against the serial reference on
// growing fixtures and checks that both return the same members.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "fixtures.hpp"
#include "kanweigh/setfun.hpp"

using namespace kanweigh;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run(const char* label, const SetFunctor& f, const SetFunctor& g) {
  NatSet fast, slow;
  double tf = seconds([&] { fast = nat_set(f, g); });
  double ts = seconds([&] { slow = nat_set_serial(f, g); });
  std::printf("%-28s members=%-8zu parallel=%9.4fs serial=%9.4fs speedup=%6.2fx %s\n", label, fast.size(), tf, ts,
              tf > 0 ? ts / tf : 0.0, fast.members == slow.members ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  namespace fx = kanweigh::fixtures;
  run("unit 6 -> 5", fx::functor(fx::unit(), {6}, {}), fx::functor(fx::unit(), {5}, {}));
  run("unit 8 -> 6", fx::functor(fx::unit(), {8}, {}), fx::functor(fx::unit(), {6}, {}));
  auto z = fx::functor(fx::z2(), {8}, {{"s", {1, 0, 3, 2, 5, 4, 7, 6}}});
  auto zt = fx::functor(fx::z2(), {6}, {{"s", {1, 0, 3, 2, 4, 5}}});
  run("z2 free(4) -> 6", z, zt);
  auto a = fx::functor(fx::parallel_pair(), {4, 4}, {{"f", {0, 1, 2, 3}}, {"g", {1, 2, 3, 0}}});
  auto b = fx::functor(fx::parallel_pair(), {4, 4}, {{"f", {0, 1, 2, 3}}, {"g", {0, 1, 2, 3}}});
  run("parallel pair 4,4 -> 4,4", a, b);
  auto c = fx::functor(fx::cospan(), {3, 3, 4}, {{"p", {0, 1, 2}}, {"q", {1, 2, 3}}});
  run("cospan 3,3,4 -> self", c, c);
  return 0;
}
