#include "qm/defect.hpp"

#include <sstream>

namespace qm {

std::string describe(const DefectStrategy& s) {
  std::ostringstream os;
  if (const auto* ex = std::get_if<ExhaustiveStrategy>(&s)) {
    os << "exhaustive(radius=" << ex->radius << ")";
  } else {
    const auto& r = std::get<RandomStrategy>(s);
    os << "random(count=" << r.count << ",max_length=" << r.max_length << ",seed=" << r.seed << ")";
  }
  return os.str();
}

void DefectReport::write_csv(std::ostream& os) const {
  os << "x_len,y_len,delta_abs\n";
  for (const auto& r : rows) os << r.x_len << ',' << r.y_len << ',' << r.delta_abs << '\n';
  os << "observed_max,bound,samples,seed\n";
  os << observed_max << ',' << bound << ',' << samples << ',' << seed << '\n';
}

}  // namespace qm
