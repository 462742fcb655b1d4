#include "borbit/signed_perm.hpp"

#include <sstream>
#include <stdexcept>

namespace borbit {

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = i;
  return from_window(std::move(img));
}

SignedPermutation SignedPermutation::from_window(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("empty window");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n) throw std::invalid_argument("window value out of range");
    if (seen[a]) throw std::invalid_argument("window value repeated");
    seen[a] = true;
  }
  SignedPermutation w;
  w.img_ = std::move(images);
  return w;
}

SignedPermutation SignedPermutation::parse_window(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 3 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("window notation must look like [2,-1,3]");
  std::vector<int> img;
  const std::string body = t.substr(1, t.size() - 2);
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? comma : comma - start);
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad window entry: " + item);
    img.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return from_window(std::move(img));
}

int SignedPermutation::apply(int i) const {
  int n = this->n();
  if (!valid_signed_index(i, n)) throw std::invalid_argument("index out of range");
  return i > 0 ? img_[i - 1] : -img_[-i - 1];
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(n());
  for (int i = 1; i <= n(); ++i) {
    int v = img_[i - 1];
    if (v > 0)
      img[v - 1] = i;
    else
      img[-v - 1] = -i;
  }
  return from_window(std::move(img));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

bool SignedPermutation::is_involution() const { return compose(*this, *this).is_identity(); }

std::string SignedPermutation::window() const {
  std::string s = "[";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::vector<int> SignedPermutation::to_flat() const {
  int n = this->n();
  std::vector<int> flat(2 * n);
  for (int p = 0; p < 2 * n; ++p) flat[p] = display_pos(apply(signed_of_pos(p, n)), n);
  return flat;
}

SignedPermutation SignedPermutation::from_flat(const std::vector<int>& flat) {
  int n = static_cast<int>(flat.size()) / 2;
  if (flat.size() != static_cast<size_t>(2 * n) || n < 1)
    throw std::invalid_argument("flat permutation must have even size");
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = signed_of_pos(flat[display_pos(i, n)], n);
  auto w = from_window(std::move(img));
  if (w.to_flat() != flat)
    throw std::invalid_argument("flat permutation is not centrally symmetric");
  return w;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<int> img(u.n());
  for (int i = 1; i <= u.n(); ++i) img[i - 1] = u.apply(w.apply(i));
  return SignedPermutation::from_window(std::move(img));
}

Involution::Involution(SignedPermutation w) : w_(std::move(w)) {
  if (w_.n() == 0 || !w_.is_involution())
    throw std::invalid_argument("permutation is not an involution");
}

}  // namespace borbit
