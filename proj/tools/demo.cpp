// Library walkthrough on F4/B3: Schubert basis, a product, the Gysin groups and the presentation.
#include <chowring/chowring.hpp>

#include <iostream>

int main() {
    using namespace chowring;
    SpaceConfig space = *find_preset("F4/B3");
    auto table = make_table(space);
    SchubertEngine engine(table);

    std::cout << space.name << ": " << table->size() << " Schubert classes, top degree " << table->top_degree() << "\n";

    int y1 = table->find_word({4});
    int y4 = table->find_word({3, 2, 3, 4});
    std::cout << class_label(*table, y1) << " * " << class_label(*table, y4) << " = "
              << to_string(*table, engine.multiply(y1, y4)) << "\n";

    GysinComputation gysin(engine);
    std::cout << "nonzero cohomology of the circle bundle:";
    for (int q = 0; q <= 2 * table->top_degree() + 1; ++q)
        if (!gysin.group(q).trivial()) std::cout << " H^" << q << "=" << gysin.group(q).to_string();
    std::cout << "\n";

    GeneratorBinding binding = binding_for(space, engine);
    Presentation p = schubert_presentation(engine, binding, space.name);
    std::cout << presentation_text(space, *table, p);

    RationalHomotopyResult rh = rational_homotopy(binding.ring, polys_of(p.relations));
    std::cout << "rational homotopy degrees:";
    for (int d : rh.degrees) std::cout << " " << d;
    std::cout << "\n";
    return 0;
}
