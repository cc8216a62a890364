#ifndef C2T_FIXTURES_DATA_HPP
#define C2T_FIXTURES_DATA_HPP

#include <string_view>

namespace c2t::ss::detail {

/// Contents of data/fixtures/<name>.json compiled into the library; throws std::out_of_range.
std::string_view embedded_fixture(std::string_view name);

} // namespace c2t::ss::detail

#endif
