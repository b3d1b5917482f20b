#ifndef CGMY_ESTIMATE_HPP
#define CGMY_ESTIMATE_HPP

#include <optional>
#include <string_view>

namespace cgmy {

enum class Method { mc, ift, expansion1, expansion2, expansion3 };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

// One priced point. std_err is present exactly when the method is Monte
// Carlo; the analytic methods carry no sampling error.
struct PriceEstimate {
  double price = 0.0;  // per unit spot, >= 0
  std::optional<double> std_err;
  Method method = Method::mc;
  double t = 0.0;
};

}  // namespace cgmy

#endif
