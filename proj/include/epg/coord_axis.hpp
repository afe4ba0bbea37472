#pragma once

#include <list>

namespace epg {

// Grows a line order by local insertion; handles stay valid across inserts
// (std::list iterators). Values are meaningless until finalize() numbers the
// lines 0,1,2,... in list order, after which *handle is the coordinate.
class CoordAxis {
   public:
    using Handle = std::list<int>::iterator;

    Handle push_back() { return order_.insert(order_.end(), -1); }
    Handle insert_before(Handle h) { return order_.insert(h, -1); }
    Handle insert_after(Handle h) { return order_.insert(std::next(h), -1); }

    void finalize() {
        int v = 0;
        for (int& slot : order_) slot = v++;
    }

    std::size_t size() const { return order_.size(); }

   private:
    std::list<int> order_;
};

}  // namespace epg
