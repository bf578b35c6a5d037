#include "hmw/carousel.hpp"

#include "hmw/errors.hpp"

namespace hmw {

std::string to_string(const Embedding& tau) {
  return "P" + std::to_string(tau.locus) + ":b" + std::to_string(tau.beta) + ":i" + std::to_string(tau.i);
}

Carousel::Carousel(SplittingProfile profile) : profile_(std::move(profile)) {
  const auto& loci = profile_.loci();
  for (std::size_t l = 0; l < loci.size(); ++l) {
    locus_offset_.push_back(embeddings_.size());
    for (int beta = 0; beta < loci[l].f; ++beta)
      for (int i = 1; i <= loci[l].e; ++i) embeddings_.push_back({l, beta, i});
  }
  locus_offset_.push_back(embeddings_.size());

  const std::size_t d = embeddings_.size();
  sigma_.resize(d);
  sigma_inv_.resize(d);
  n_.resize(d);
  const Integer p = profile_.p_integer();
  for (std::size_t t = 0; t < d; ++t) {
    const Embedding& tau = embeddings_[t];
    const PrimeLocus& locus = loci[tau.locus];
    const Embedding next = tau.i < locus.e ? Embedding{tau.locus, tau.beta, tau.i + 1}
                                           : Embedding{tau.locus, (tau.beta + 1) % locus.f, 1};
    sigma_[t] = index_of(next);
    sigma_inv_[sigma_[t]] = t;
    n_[t] = tau.i == 1 ? p : Integer(1);
  }
}

std::size_t Carousel::index_of(const Embedding& tau) const {
  const auto& loci = profile_.loci();
  if (tau.locus >= loci.size()) throw ForeignEmbedding("embedding " + to_string(tau) + ": no such locus");
  const PrimeLocus& locus = loci[tau.locus];
  if (tau.beta < 0 || tau.beta >= locus.f || tau.i < 1 || tau.i > locus.e)
    throw ForeignEmbedding("embedding " + to_string(tau) + " is not in this carousel");
  return locus_offset_[tau.locus] + static_cast<std::size_t>(tau.beta * locus.e + (tau.i - 1));
}

void Carousel::check_index(std::size_t index) const {
  if (index >= embeddings_.size())
    throw ForeignEmbedding("embedding index " + std::to_string(index) + " out of range for d = " +
                           std::to_string(embeddings_.size()));
}

const Embedding& Carousel::at(std::size_t index) const {
  check_index(index);
  return embeddings_[index];
}

std::size_t Carousel::sigma(std::size_t index) const {
  check_index(index);
  return sigma_[index];
}

std::size_t Carousel::sigma_inv(std::size_t index) const {
  check_index(index);
  return sigma_inv_[index];
}

const Integer& Carousel::n(std::size_t index) const {
  check_index(index);
  return n_[index];
}

std::vector<std::size_t> Carousel::orbit(std::size_t index) const {
  check_index(index);
  std::vector<std::size_t> out{index};
  for (std::size_t t = sigma_[index]; t != index; t = sigma_[t]) out.push_back(t);
  return out;
}

std::vector<Embedding> Carousel::orbit(const Embedding& tau) const {
  std::vector<Embedding> out;
  for (std::size_t t : orbit(index_of(tau))) out.push_back(embeddings_[t]);
  return out;
}

std::vector<std::size_t> Carousel::locus_members(std::size_t locus) const {
  if (locus + 1 >= locus_offset_.size()) throw ForeignEmbedding("no such locus " + std::to_string(locus));
  std::vector<std::size_t> out;
  for (std::size_t t = locus_offset_[locus]; t < locus_offset_[locus + 1]; ++t) out.push_back(t);
  return out;
}

}  // namespace hmw
