#include "barw/diagram.hpp"

#include <stdexcept>

namespace barw {

Diagram::Diagram(FinCategory shape) : shape_(std::move(shape)) {
  at_.resize(shape_.num_objects());
  arrows_.resize(shape_.num_morphisms());
  arrow_set_.assign(shape_.num_morphisms(), 0);
}

SimplicialSet& Diagram::set_at(unsigned obj, SimplicialSet x) {
  at_.at(obj) = std::make_unique<SimplicialSet>(std::move(x));
  return *at_[obj];
}

void Diagram::set_arrow(unsigned f, std::vector<std::vector<Simplex>> gen_images) {
  arrows_.at(f) = SimplicialMap(at_.at(shape_.src(f)).get(),
                                at_.at(shape_.dst(f)).get(), std::move(gen_images));
  arrow_set_[f] = 1;
}

void Diagram::finish() {
  for (unsigned a = 0; a < shape_.num_objects(); ++a)
    if (!at_[a]) throw std::logic_error("diagram value missing at object " +
                                        shape_.object_name(a));
  for (unsigned f = 0; f < shape_.num_morphisms(); ++f) {
    if (arrow_set_[f]) continue;
    if (!shape_.is_id(f))
      throw std::logic_error("diagram arrow missing for " + shape_.mor(f).label);
    arrows_[f] = SimplicialMap::identity(at_[shape_.src(f)].get());
    arrow_set_[f] = 1;
  }
}

void Diagram::validate() const {
  for (unsigned f = 0; f < shape_.num_morphisms(); ++f) {
    if (!arrow_set_[f]) throw std::logic_error("diagram arrow not set");
    arrows_[f].validate();
  }
  for (unsigned a = 0; a < shape_.num_objects(); ++a) {
    const SimplicialMap& idm = arrows_[shape_.id(a)];
    const SimplicialSet& x = at(a);
    for (unsigned n = 0; n <= x.maxdim(); ++n)
      for (unsigned g = 0; g < x.num_gens(n); ++g)
        if (idm.gen_image(n, g) != x.gen_simplex(n, g))
          throw std::logic_error("diagram does not send an identity to the identity");
  }
  for (unsigned f = 0; f < shape_.num_morphisms(); ++f)
    for (unsigned g = 0; g < shape_.num_morphisms(); ++g) {
      if (!shape_.composable(f, g)) continue;
      unsigned h = shape_.comp(f, g);
      const SimplicialSet& x = at(shape_.src(g));
      for (unsigned n = 0; n <= x.maxdim(); ++n)
        for (unsigned k = 0; k < x.num_gens(n); ++k)
          if (arrows_[h].gen_image(n, k) !=
              arrows_[f].apply(arrows_[g].gen_image(n, k)))
            throw std::logic_error("diagram functoriality fails at " +
                                   shape_.mor(f).label + " o " + shape_.mor(g).label);
    }
}

Diagram constant_diagram(FinCategory shape, const SimplicialSet& value) {
  Diagram d(std::move(shape));
  const FinCategory& c = d.shape();
  for (unsigned a = 0; a < c.num_objects(); ++a) d.set_at(a, value);
  for (unsigned f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_id(f)) continue;
    std::vector<std::vector<Simplex>> imgs(value.maxdim() + 1);
    for (unsigned n = 0; n <= value.maxdim(); ++n)
      for (unsigned g = 0; g < value.num_gens(n); ++g)
        imgs[n].push_back(value.gen_simplex(n, g));
    d.set_arrow(f, std::move(imgs));
  }
  d.finish();
  return d;
}

Diagram point_diagram(FinCategory shape, unsigned maxdim) {
  return constant_diagram(std::move(shape), point_sset(maxdim));
}

Diagram hom_from(const FinCategory& c, unsigned a, unsigned maxdim) {
  Diagram d(c);
  for (unsigned b = 0; b < c.num_objects(); ++b) {
    std::vector<std::string> pts;
    for (unsigned f : c.hom(a, b)) pts.push_back(c.mor(f).label);
    d.set_at(b, discrete_sset("hom(" + c.object_name(a) + "," + c.object_name(b) + ")",
                              pts, maxdim));
  }
  for (unsigned f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_id(f)) continue;
    // f: b -> b', morphism g in hom(a,b) goes to f o g.
    unsigned b = c.src(f), b2 = c.dst(f);
    auto from = c.hom(a, b);
    auto to = c.hom(a, b2);
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned g : from) {
      unsigned h = c.comp(f, g);
      unsigned pos = 0;
      while (to[pos] != h) ++pos;
      imgs[0].push_back(Simplex{0, {}, pos});
    }
    d.set_arrow(f, std::move(imgs));
  }
  d.finish();
  return d;
}

Diagram hom_into(const FinCategory& c, unsigned b, unsigned maxdim) {
  Diagram d(c.op());
  const FinCategory& cop = d.shape();
  for (unsigned a = 0; a < c.num_objects(); ++a) {
    std::vector<std::string> pts;
    for (unsigned f : c.hom(a, b)) pts.push_back(c.mor(f).label);
    d.set_at(a, discrete_sset("hom(" + c.object_name(a) + "," + c.object_name(b) + ")",
                              pts, maxdim));
  }
  for (unsigned f = 0; f < cop.num_morphisms(); ++f) {
    if (cop.is_id(f)) continue;
    // In c: f maps a -> a2; the arrow in the opposite shape takes
    // hom(a2, b) to hom(a, b) by g |-> g o f.
    unsigned a2 = cop.src(f), a = cop.dst(f);
    auto from = c.hom(a2, b);
    auto to = c.hom(a, b);
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned g : from) {
      unsigned h = c.comp(g, f);
      unsigned pos = 0;
      while (to[pos] != h) ++pos;
      imgs[0].push_back(Simplex{0, {}, pos});
    }
    d.set_arrow(f, std::move(imgs));
  }
  d.finish();
  return d;
}

Diagram monoid_as_diagram_cov(const FinMonoid& m, unsigned maxdim) {
  FinCategory c = as_category(m);
  Diagram d(c);
  std::vector<std::string> pts;
  for (unsigned x = 0; x < m.size(); ++x) pts.push_back(m.elem_name(x));
  SimplicialSet& v = d.set_at(0, discrete_sset(m.name() + "_set", pts, maxdim));
  v.set_basepoint(m.unit());
  for (unsigned f = 0; f < m.size(); ++f) {
    if (f == m.unit()) continue;
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned x = 0; x < m.size(); ++x)
      imgs[0].push_back(Simplex{0, {}, m.mul(f, x)});
    d.set_arrow(f, std::move(imgs));
  }
  d.finish();
  return d;
}

Diagram monoid_as_diagram_contra(const FinMonoid& m, unsigned maxdim) {
  FinCategory cop = as_category(m).op();
  Diagram d(std::move(cop));
  std::vector<std::string> pts;
  for (unsigned x = 0; x < m.size(); ++x) pts.push_back(m.elem_name(x));
  SimplicialSet& v = d.set_at(0, discrete_sset(m.name() + "_set", pts, maxdim));
  v.set_basepoint(m.unit());
  for (unsigned f = 0; f < m.size(); ++f) {
    if (f == m.unit()) continue;
    std::vector<std::vector<Simplex>> imgs(maxdim + 1);
    for (unsigned x = 0; x < m.size(); ++x)
      imgs[0].push_back(Simplex{0, {}, m.mul(x, f)});
    d.set_arrow(f, std::move(imgs));
  }
  d.finish();
  return d;
}

}  // namespace barw
