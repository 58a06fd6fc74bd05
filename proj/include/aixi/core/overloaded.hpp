#ifndef AIXI_CORE_OVERLOADED_HPP
#define AIXI_CORE_OVERLOADED_HPP

namespace aixi {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace aixi

#endif  // AIXI_CORE_OVERLOADED_HPP
