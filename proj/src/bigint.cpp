#include "spancom/bigint.hpp"

namespace spancom {

BigInt binom(long a, long b) {
    if (a < 0) {
        raise(ErrorCode::negative_upper,
              "binom: negative upper index " + std::to_string(a));
    }
    if (b < 0 || b > a) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return result;
}

std::string to_decimal(const BigInt& value) {
    return value.get_str(10);
}

} // namespace spancom
