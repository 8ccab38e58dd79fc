#include "tmcg/bword.hpp"

#include <cctype>

#include "tmcg/errors.hpp"

namespace tmcg {

  std::string BWord::to_string() const {
    if (letters.empty()) {
      return "e";
    }
    static constexpr char names[] = {'t', 'p', 'b', 'a'};
    std::string           s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k) {
        s += ' ';
      }
      s += names[free::index_of(letters[k])];
      if (letters[k] < 0) {
        s += '\'';
      }
    }
    return s;
  }

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, std::string_view alphabet, bool sugar)
          : _text(text), _alpha(alphabet), _sugar(sugar) {}

      BWord equation() {
        BWord lhs = word();
        skip();
        if (peek() == '=') {
          ++_pos;
          BWord rhs = word();
          lhs       = lhs * rhs.inverse();
        }
        skip();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return lhs;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        std::string at = _pos < _text.size() ? std::string(1, _text[_pos]) : "end of input";
        throw ParseError(msg + " near '" + at + "'", _pos);
      }

      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      bool starts_primary() {
        skip();
        char c = peek();
        return c == '(' || c == '[' || c == 'e' || c == '1' || _alpha.find(c) != std::string_view::npos;
      }

      BWord word() {
        BWord w;
        while (starts_primary()) {
          w = w * term();
        }
        return w;
      }

      int integer() {
        skip();
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++_pos;
        }
        std::size_t start = _pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an exponent");
        }
        int v = std::stoi(std::string(_text.substr(start, _pos - start)));
        return neg ? -v : v;
      }

      BWord term() {
        BWord x = primary();
        for (;;) {
          skip();
          if (peek() == '\'') {
            ++_pos;
            x = x.inverse();
          } else if (peek() == '^') {
            ++_pos;
            skip();
            if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
              x = x.power(integer());
            } else {
              if (!starts_primary()) {
                fail("expected exponent or conjugator");
              }
              BWord y = primary();
              x       = y.inverse() * x * y;
            }
          } else {
            return x;
          }
        }
      }

      BWord letter(int g) {
        return BWord::gen(static_cast<Gen>(g));
      }

      BWord sugar_twist(int i) {
        BWord t = letter(0), b = letter(2), a2 = letter(3).power(2);
        switch (i) {
          case 1: return b * t * b.inverse();
          case 2: return b.inverse() * t * b;
          case 3: return a2 * sugar_twist(1) * a2;
          case 4: return a2 * sugar_twist(2) * a2;
          default: fail("twist index must be 1..4");
        }
      }

      BWord primary() {
        skip();
        char c = peek();
        if (c == '(') {
          ++_pos;
          BWord w = word();
          skip();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return w;
        }
        if (c == '[') {
          ++_pos;
          BWord x = word();
          skip();
          if (peek() != ',') {
            fail("expected ','");
          }
          ++_pos;
          BWord y = word();
          skip();
          if (peek() != ']') {
            fail("expected ']'");
          }
          ++_pos;
          return x.inverse() * y.inverse() * x * y;
        }
        if (c == 'e' && _alpha.find('e') == std::string_view::npos) {
          ++_pos;
          return {};
        }
        if (c == '1') {
          ++_pos;
          return {};
        }
        auto g = _alpha.find(c);
        if (g == std::string_view::npos) {
          fail("unknown letter");
        }
        ++_pos;
        if (g == 0 && _sugar && std::isdigit(static_cast<unsigned char>(peek()))) {
          int i = peek() - '0';
          ++_pos;
          return sugar_twist(i);
        }
        return letter(static_cast<int>(g));
      }

      std::string_view _text;
      std::string_view _alpha;
      bool             _sugar;
      std::size_t      _pos = 0;
    };
  }  // namespace

  BWord parse_word(std::string_view text, std::string_view alphabet, bool sugar) {
    if (alphabet.size() != 4) {
      throw DomainError("alphabet must name four generators");
    }
    return Parser(text, alphabet, sugar).equation();
  }

  BWord parse_move_word(std::string_view text) {
    return parse_word(text, "TPBA", false);
  }

}  // namespace tmcg
